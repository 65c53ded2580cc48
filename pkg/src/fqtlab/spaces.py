"""Finite F_q-subspaces of F_q[t] in reduced degree-echelon form.

The canonical basis of a subspace is monic, strictly increasing in degree,
and fully reduced: basis element i has coefficient zero at the leading
degree of every other basis element.  Gaussian elimination with the pivot
position equal to the polynomial degree produces this form, so equal
subspaces always carry identical basis tuples.
"""

from __future__ import annotations

import itertools

from .errors import ResourceLimitError
from .field import Field
from .poly import Poly

DEFAULT_ENUM_CAP = 1_000_000


def _strip(row: list[int]) -> None:
    while row and row[-1] == 0:
        row.pop()


def _axpy(field: Field, target: list[int], c: int, source: list[int]) -> None:
    """target -= c * source, padding target as needed."""
    if c == 0:
        return
    if len(source) > len(target):
        target.extend([0] * (len(source) - len(target)))
    for i, s in enumerate(source):
        if s:
            target[i] = field.sub(target[i], field.mul(c, s))


def _insert_row(field: Field, pivots: dict[int, list[int]], row: list[int]) -> None:
    row = list(row)
    while True:
        _strip(row)
        if not row:
            return
        d = len(row) - 1
        piv = pivots.get(d)
        if piv is None:
            break
        _axpy(field, row, row[d], piv)
    lead = row[d]
    if lead != 1:
        inv = field.inv(lead)
        row = [field.mul(inv, c) for c in row]
    # back-substitute: clear existing pivot columns inside the new row,
    # then clear the new pivot column from every existing row
    for e, prow in list(pivots.items()):
        if e < d and row[e]:
            _axpy(field, row, row[e], prow)
    for e, prow in pivots.items():
        if e > d and len(prow) > d and prow[d]:
            _axpy(field, prow, prow[d], row)
    pivots[d] = row


class Subspace:
    """An F_q-subspace of F_q[t] with its canonical echelon basis."""

    __slots__ = ("field", "basis")

    def __init__(self, field: Field, basis: tuple[Poly, ...]):
        # internal constructor: callers must pass a reduced basis (use span)
        self.field = field
        self.basis = basis

    @classmethod
    def span(cls, field: Field, generators) -> "Subspace":
        pivots: dict[int, list[int]] = {}
        for g in generators:
            if g.field != field:
                raise ValueError("generator field mismatch")
            _insert_row(field, pivots, list(g.coeffs))
        basis = tuple(Poly(field, pivots[d]) for d in sorted(pivots))
        return cls(field, basis)

    @classmethod
    def zero(cls, field: Field) -> "Subspace":
        return cls(field, ())

    @classmethod
    def pol(cls, field: Field, n: int) -> "Subspace":
        """The subspace of all polynomials of degree < n."""
        return cls(field, tuple(Poly.monomial(field, k) for k in range(n)))

    # -- structure ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.field.q ** self.dim

    def degrees(self) -> tuple[int, ...]:
        return tuple(b.degree for b in self.basis)

    def contains(self, x: Poly) -> bool:
        if x.field != self.field:
            return False
        bymap = {b.degree: b.coeffs for b in self.basis}
        row = list(x.coeffs)
        f = self.field
        while True:
            _strip(row)
            if not row:
                return True
            d = len(row) - 1
            piv = bymap.get(d)
            if piv is None:
                return False
            _axpy(f, row, row[d], list(piv))

    def __contains__(self, x) -> bool:
        return isinstance(x, Poly) and self.contains(x)

    def coordinates(self, x: Poly) -> list[int] | None:
        """Coefficients of x over the canonical basis, or None if outside."""
        if x.field != self.field:
            return None
        f = self.field
        bymap = {b.degree: (i, b.coeffs) for i, b in enumerate(self.basis)}
        row = list(x.coeffs)
        coords = [0] * self.dim
        while True:
            _strip(row)
            if not row:
                return coords
            d = len(row) - 1
            hit = bymap.get(d)
            if hit is None:
                return None
            i, piv = hit
            coords[i] = row[d]
            _axpy(f, row, row[d], list(piv))

    # -- operations ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("mixed-field subspace arithmetic")
        return Subspace.span(self.field, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        if other.field != self.field:
            raise ValueError("mixed-field subspace arithmetic")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field)
        cols = [list(b.coeffs) for b in self.basis] + [list(b.coeffs) for b in other.basis]
        nrows = max(len(c) for c in cols)
        kernel = _nullspace(self.field, cols, nrows)
        gens = []
        for vec in kernel:
            acc = Poly.zero(self.field)
            for c, b in zip(vec[: self.dim], self.basis):
                acc = acc + b.scale(c)
            gens.append(acc)
        return Subspace.span(self.field, gens)

    def dilate(self, c: Poly) -> "Subspace":
        """Image of the space under multiplication by a fixed polynomial."""
        if c.field != self.field:
            raise ValueError("mixed-field dilation")
        if c.is_zero():
            raise ValueError("dilation by zero collapses the space")
        return Subspace.span(self.field, [b * c for b in self.basis])

    def weak_dim(self) -> int:
        """dim(V + tV) - dim(V): the base-q log of the growth |V+tV| / |V|."""
        shifted = [b.shift(1) for b in self.basis]
        return Subspace.span(self.field, list(self.basis) + shifted).dim - self.dim

    def enumerate_elements(self, cap: int = DEFAULT_ENUM_CAP) -> list[Poly]:
        if self.size > cap:
            raise ResourceLimitError(
                f"subspace has {self.size} elements, above the cap of {cap}")
        elems = [Poly.zero(self.field)]
        for b in self.basis:
            scaled = [b.scale(c) for c in range(self.field.q)]
            elems = [e + s for e in elems for s in scaled]
        return elems

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field == other.field and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.field, self.basis))

    def __repr__(self) -> str:
        gens = ", ".join(str(b) for b in self.basis)
        return f"Subspace({self.field!r}, [{gens}])"


def span(field: Field, generators) -> Subspace:
    return Subspace.span(field, generators)


def _nullspace(field: Field, cols: list[list[int]], nrows: int) -> list[list[int]]:
    """Basis of {x : M x = 0} where M has the given columns."""
    ncols = len(cols)
    rows = [[cols[j][i] if i < len(cols[j]) else 0 for j in range(ncols)]
            for i in range(nrows)]
    pivot_of_col: dict[int, int] = {}
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, nrows):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [field.sub(a, field.mul(c, b))
                           for a, b in zip(rows[i], rows[rank])]
        pivot_of_col[col] = rank
        rank += 1
    basis = []
    free_cols = [c for c in range(ncols) if c not in pivot_of_col]
    for fc in free_cols:
        vec = [0] * ncols
        vec[fc] = 1
        for pc, prow in pivot_of_col.items():
            vec[pc] = field.neg(rows[prow][fc])
        basis.append(vec)
    return basis


# -- counting and enumeration of subspaces -----------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional F_q-space."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def galois_number(n: int, q: int) -> int:
    """Total number of subspaces of an n-dimensional F_q-space."""
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def iter_subspaces(field: Field, n: int, dims=None):
    """Every subspace of Pol(n), grouped by pivot-degree set.

    Enumerates reduced echelon bases directly: choose the pivot degrees,
    then run the free coefficients (positions below a pivot and outside the
    pivot set) over all of F_q.
    """
    q = field.q
    dim_range = range(n + 1) if dims is None else dims
    for k in dim_range:
        for pivots in itertools.combinations(range(n), k):
            pivset = set(pivots)
            slots = []  # (basis index, degree) of each free coefficient
            for i, d in enumerate(pivots):
                slots.extend((i, e) for e in range(d) if e not in pivset)
            for values in itertools.product(range(q), repeat=len(slots)):
                rows = []
                for i, d in enumerate(pivots):
                    coeffs = [0] * (d + 1)
                    coeffs[d] = 1
                    rows.append(coeffs)
                for (i, e), v in zip(slots, values):
                    rows[i][e] = v
                V = Subspace.span(field, [Poly(field, r) for r in rows])
                assert V.degrees() == pivots
                yield V

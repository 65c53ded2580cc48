"""Finite sets of polynomials and their additive machinery.

Sumsets and difference sets run through the packed-code kernels; every
computed set is guarded by an element cap (default one million) and a
ResourceLimitError is raised instead of silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import ResourceLimitError
from .field import Field
from .poly import Poly, pol_elements
from .spaces import Subspace

DEFAULT_SET_CAP = 1_000_000


class PolySet:
    """Immutable set of polynomials over one field, iterated in encoding order."""

    __slots__ = ("field", "_elems")

    def __init__(self, field: Field, elements=()):
        elems = frozenset(elements)
        for e in elems:
            if not isinstance(e, Poly) or e.field != field:
                raise ValueError("set elements must be polynomials over the set field")
        self.field = field
        self._elems = elems

    @classmethod
    def from_subspace(cls, V: Subspace, cap: int = DEFAULT_SET_CAP) -> "PolySet":
        return cls(V.field, V.enumerate_elements(cap))

    @classmethod
    def pol(cls, field: Field, n: int, cap: int = DEFAULT_SET_CAP) -> "PolySet":
        if field.q ** n > cap:
            raise ResourceLimitError(
                f"Pol({n}) has {field.q ** n} elements, above the cap of {cap}")
        return cls(field, pol_elements(field, n))

    def __len__(self) -> int:
        return len(self._elems)

    def __iter__(self):
        return iter(sorted(self._elems, key=Poly.encode))

    def __contains__(self, x) -> bool:
        return x in self._elems

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySet):
            return NotImplemented
        return self.field == other.field and self._elems == other._elems

    def __hash__(self) -> int:
        return hash((self.field, self._elems))

    def __repr__(self) -> str:
        items = ", ".join(str(e) for e in self)
        return f"PolySet({self.field!r}, {{{items}}})"

    def max_degree(self) -> int:
        """Largest degree present, or -1 for sets of only the zero polynomial."""
        degs = [e.degree for e in self._elems if not e.is_zero()]
        return max(degs) if degs else -1


def _pack_spec(*sets: PolySet) -> kernels.PackSpec:
    field = sets[0].field
    ncoeffs = max(s.max_degree() for s in sets) + 1
    return kernels.PackSpec.for_field(field, max(ncoeffs, 1))


def _codes(A: PolySet, spec: kernels.PackSpec) -> list[int]:
    return [kernels.pack_coeffs(spec, e.coeffs) for e in A]


def _decode(field: Field, spec: kernels.PackSpec, codes) -> list[Poly]:
    return [Poly(field, kernels.unpack_coeffs(spec, c)) for c in codes]


def _check_pair(A: PolySet, B: PolySet) -> None:
    if A.field != B.field:
        raise ValueError("mixed-field set operation")


def sumset(A: PolySet, B: PolySet, cap: int = DEFAULT_SET_CAP,
           backend: str | None = None) -> PolySet:
    """{a + b : a in A, b in B}."""
    _check_pair(A, B)
    if not len(A) or not len(B):
        return PolySet(A.field)
    spec = _pack_spec(A, B)
    codes = kernels.pairwise_sum_unique(_codes(A, spec), _codes(B, spec),
                                        spec, cap=cap, backend=backend)
    return PolySet(A.field, _decode(A.field, spec, codes))


def difference_set(A: PolySet, B: PolySet, cap: int = DEFAULT_SET_CAP,
                   backend: str | None = None) -> PolySet:
    """{a - b : a in A, b in B}."""
    _check_pair(A, B)
    if not len(A) or not len(B):
        return PolySet(A.field)
    spec = _pack_spec(A, B)
    bneg = [kernels.negate_code(spec, c) for c in _codes(B, spec)]
    codes = kernels.pairwise_sum_unique(_codes(A, spec), bneg,
                                        spec, cap=cap, backend=backend)
    return PolySet(A.field, _decode(A.field, spec, codes))


def dilate(A: PolySet, c: Poly) -> PolySet:
    """{c * a : a in A}; c must be nonzero so sizes are preserved."""
    if c.field != A.field:
        raise ValueError("mixed-field dilation")
    if c.is_zero():
        raise ValueError("dilation by zero collapses the set")
    return PolySet(A.field, (a * c for a in A))


def translate(A: PolySet, x: Poly) -> PolySet:
    """{a + x : a in A}."""
    if x.field != A.field:
        raise ValueError("mixed-field translation")
    return PolySet(A.field, (a + x for a in A))


def iterated_sumset(A: PolySet, n: int, cap: int = DEFAULT_SET_CAP,
                    backend: str | None = None) -> PolySet:
    """The n-fold sumset A + A + ... + A."""
    if n < 1:
        raise ValueError("iterated sumset needs n >= 1")
    acc = A
    for _ in range(n - 1):
        acc = sumset(acc, A, cap=cap, backend=backend)
    return acc


@dataclass(frozen=True)
class DoublingStats:
    size: int
    sum_size: int
    diff_size: int
    dilate_sum_size: int
    k1: Fraction
    k2: Fraction

    def to_record(self) -> dict:
        return {
            "size": self.size,
            "sum_size": self.sum_size,
            "dilate_sum_size": self.dilate_sum_size,
            "diff_size": self.diff_size,
            "k1_num": self.k1.numerator,
            "k1_den": self.k1.denominator,
            "k2_num": self.k2.numerator,
            "k2_den": self.k2.denominator,
        }


def doubling_stats(A: PolySet, cap: int = DEFAULT_SET_CAP,
                   backend: str | None = None) -> DoublingStats:
    """Exact doubling ratios |A+A|/|A| and |A+tA|/|A|."""
    if not len(A):
        raise ValueError("doubling statistics need a nonempty set")
    t = Poly.monomial(A.field, 1)
    plus = sumset(A, A, cap=cap, backend=backend)
    minus = difference_set(A, A, cap=cap, backend=backend)
    mixed = sumset(A, dilate(A, t), cap=cap, backend=backend)
    return DoublingStats(
        size=len(A),
        sum_size=len(plus),
        diff_size=len(minus),
        dilate_sum_size=len(mixed),
        k1=Fraction(len(plus), len(A)),
        k2=Fraction(len(mixed), len(A)),
    )


def ruzsa_cover(A: PolySet, B: PolySet, cap: int = DEFAULT_SET_CAP) -> PolySet:
    """Greedy covering witness X, a subset of B with pairwise disjoint
    translates x + A, maximal under inclusion.

    Maximality forces B to be covered by A - A + X, and disjointness packs
    the translates inside A + B, so |X| <= |A+B| / |A|.  Both contracts are
    revalidated before returning.
    """
    _check_pair(A, B)
    if not len(A):
        raise ValueError("covering needs a nonempty A")
    chosen: list[Poly] = []
    used: set[Poly] = set()
    for b in B:
        shifted = [a + b for a in A]
        if any(s in used for s in shifted):
            continue
        chosen.append(b)
        used.update(shifted)
    X = PolySet(A.field, chosen)
    diff = difference_set(A, A, cap=cap)
    for b in B:
        assert any((b - x) in diff for x in chosen), "covering contract violated"
    assert len(X) * len(A) <= len(sumset(A, B, cap=cap)), \
        "covering size bound violated"
    return X

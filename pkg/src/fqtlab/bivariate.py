"""Bivariate model for dilation by an element transcendental over F_p[t].

Polynomials in two commuting variables t and u over a prime field: u stands
in for a ratio that satisfies no algebraic relation with t, so sums and the
two dilations a -> t*a and a -> u*a stay inside F_p[t, u] and sizes can be
measured exactly.  The flagship construction dilate_example(p, n, m) is the
set of all sums a_1(t) u + a_2(t) u^2 + ... + a_n(t) u^n with deg a_i < m;
it has size p^(nm), grows by exactly p^n under t-dilation and p^m under
u-dilation, so the two growth exponents multiply to the log of the size.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import ResourceLimitError
from .field import Field
from .poly import Poly

DEFAULT_SET_CAP = 1_000_000


class BiPoly:
    """Polynomial in t and u over a prime field.

    Terms are (t-degree, u-degree, coefficient) triples with nonzero
    coefficients, sorted by (u-degree, t-degree).
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms=()):
        if field.r != 1:
            raise ValueError("bivariate polynomials are supported over prime fields only")
        merged: dict[tuple[int, int], int] = {}
        for i, j, c in terms:
            if i < 0 or j < 0:
                raise ValueError("term degrees must be nonnegative")
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} out of range for F_{field.q}")
            key = (i, j)
            merged[key] = (merged.get(key, 0) + c) % field.p
        self.field = field
        self.terms = tuple(sorted(
            ((i, j, c) for (i, j), c in merged.items() if c),
            key=lambda term: (term[1], term[0])))

    @classmethod
    def zero(cls, field: Field) -> "BiPoly":
        return cls(field, ())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("mixed-field arithmetic")
        return BiPoly(self.field, self.terms + other.terms)

    def __neg__(self):
        p = self.field.p
        return BiPoly(self.field, [(i, j, (-c) % p) for i, j, c in self.terms])

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def dilate_t(self) -> "BiPoly":
        return BiPoly(self.field, [(i + 1, j, c) for i, j, c in self.terms])

    def dilate_u(self) -> "BiPoly":
        return BiPoly(self.field, [(i, j + 1, c) for i, j, c in self.terms])

    def t_degree(self) -> int:
        return max((i for i, _, _ in self.terms), default=-1)

    def u_degree(self) -> int:
        return max((j for _, j, _ in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.field, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return ";".join(f"{i},{j},{c}" for i, j, c in self.terms)

    def __repr__(self) -> str:
        return f"BiPoly({self.field!r}, {list(self.terms)!r})"


class BiPolySet:
    """Immutable set of bivariate polynomials over one prime field."""

    __slots__ = ("field", "_elems")

    def __init__(self, field: Field, elements=()):
        if field.r != 1:
            raise ValueError("bivariate sets are supported over prime fields only")
        elems = frozenset(elements)
        for e in elems:
            if not isinstance(e, BiPoly) or e.field != field:
                raise ValueError("set elements must be bivariate polynomials "
                                 "over the set field")
        self.field = field
        self._elems = elems

    def __len__(self) -> int:
        return len(self._elems)

    def __iter__(self):
        return iter(sorted(self._elems, key=lambda e: e.terms))

    def __contains__(self, x) -> bool:
        return x in self._elems

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPolySet):
            return NotImplemented
        return self.field == other.field and self._elems == other._elems

    def __hash__(self) -> int:
        return hash((self.field, self._elems))

    def grid(self) -> tuple[int, int]:
        """(t-degree bound, u-degree bound) needed to index every term."""
        ti = max((e.t_degree() for e in self._elems), default=-1)
        uj = max((e.u_degree() for e in self._elems), default=-1)
        return max(ti, 0), max(uj, 0)


def _grid_spec(A: BiPolySet, B: BiPolySet) -> tuple[kernels.PackSpec, int]:
    ta, ua = A.grid()
    tb, ub = B.grid()
    ti, uj = max(ta, tb), max(ua, ub)
    ncells = (ti + 1) * (uj + 1)
    return kernels.PackSpec.for_field(A.field, ncells), ti + 1


def _pack_bi(e: BiPoly, spec: kernels.PackSpec, tspan: int) -> int:
    coeffs = [0] * spec.ncoeffs
    for i, j, c in e.terms:
        coeffs[i + j * tspan] = c
    return kernels.pack_coeffs(spec, coeffs)


def _unpack_bi(field: Field, code: int, spec: kernels.PackSpec, tspan: int) -> BiPoly:
    coeffs = kernels.unpack_coeffs(spec, code)
    return BiPoly(field, [(idx % tspan, idx // tspan, c)
                          for idx, c in enumerate(coeffs) if c])


def bi_sumset(A: BiPolySet, B: BiPolySet, cap: int = DEFAULT_SET_CAP,
              backend: str | None = None) -> BiPolySet:
    """{a + b : a in A, b in B} over the bivariate ring."""
    if A.field != B.field:
        raise ValueError("mixed-field set operation")
    if not len(A) or not len(B):
        return BiPolySet(A.field)
    spec, tspan = _grid_spec(A, B)
    acodes = [_pack_bi(e, spec, tspan) for e in A]
    bcodes = [_pack_bi(e, spec, tspan) for e in B]
    codes = kernels.pairwise_sum_unique(acodes, bcodes, spec, cap=cap, backend=backend)
    return BiPolySet(A.field, (_unpack_bi(A.field, c, spec, tspan) for c in codes))


def bi_dilate(A: BiPolySet, variable: str) -> BiPolySet:
    """Multiply every element by t or by u."""
    if variable == "t":
        return BiPolySet(A.field, (e.dilate_t() for e in A._elems))
    if variable == "u":
        return BiPolySet(A.field, (e.dilate_u() for e in A._elems))
    raise ValueError(f"unknown variable {variable!r}; expected 't' or 'u'")


def dilate_example(p: int, n: int, m: int, cap: int = DEFAULT_SET_CAP) -> BiPolySet:
    """All sums over i = 1..n of a_i(t) u^i with deg a_i < m."""
    if n < 1 or m < 1:
        raise ValueError("dilate_example needs n >= 1 and m >= 1")
    field = Field(p)
    if p ** (n * m) > cap:
        raise ResourceLimitError(
            f"construction has {p ** (n * m)} elements, above the cap of {cap}")
    elems = []
    for digits in itertools.product(range(p), repeat=n * m):
        terms = []
        for i in range(n):
            for k in range(m):
                c = digits[i * m + k]
                if c:
                    terms.append((k, i + 1, c))
        elems.append(BiPoly(field, terms))
    return BiPolySet(field, elems)


def _p_power_exponent(x: Fraction, p: int):
    """e with x = p^e, or None when x is not an integer power of p."""
    num, den = x.numerator, x.denominator
    if num == 0:
        return None
    e = 0
    while num % p == 0:
        num //= p
        e += 1
    while den % p == 0:
        den //= p
        e -= 1
    return e if num == 1 and den == 1 else None


@dataclass(frozen=True)
class GrowthReport:
    size: int
    t_sum_size: int
    u_sum_size: int
    k1: Fraction          # |A + tA| / |A|
    k2: Fraction          # |A + uA| / |A|
    log_size: float | int  # log_p |A|
    log_k1: float | int
    log_k2: float | int
    exact: bool           # every log above is an integer power exponent

    @property
    def log_product(self) -> float | int:
        return self.log_k1 * self.log_k2

    def to_record(self) -> dict:
        return {
            "size": self.size,
            "t_sum_size": self.t_sum_size,
            "u_sum_size": self.u_sum_size,
            "k1_num": self.k1.numerator,
            "k1_den": self.k1.denominator,
            "k2_num": self.k2.numerator,
            "k2_den": self.k2.denominator,
            "log_size": self.log_size,
            "log_k1": self.log_k1,
            "log_k2": self.log_k2,
            "log_product": self.log_product,
            "exact": self.exact,
        }


def growth_report(A: BiPolySet, cap: int = DEFAULT_SET_CAP,
                  backend: str | None = None) -> GrowthReport:
    """Measure |A|, |A + tA|, |A + uA| and the growth exponents base p."""
    if not len(A):
        raise ValueError("growth report needs a nonempty set")
    p = A.field.p
    t_sum = bi_sumset(A, bi_dilate(A, "t"), cap=cap, backend=backend)
    u_sum = bi_sumset(A, bi_dilate(A, "u"), cap=cap, backend=backend)
    k1 = Fraction(len(t_sum), len(A))
    k2 = Fraction(len(u_sum), len(A))
    logs = [_p_power_exponent(Fraction(len(A)), p),
            _p_power_exponent(k1, p),
            _p_power_exponent(k2, p)]
    exact = all(e is not None for e in logs)
    if not exact:
        logp = math.log(p)
        fallback = [math.log(len(A)) / logp,
                    math.log(float(k1)) / logp,
                    math.log(float(k2)) / logp]
        logs = [l if l is not None else f for l, f in zip(logs, fallback)]
    return GrowthReport(
        size=len(A),
        t_sum_size=len(t_sum),
        u_sum_size=len(u_sum),
        k1=k1,
        k2=k2,
        log_size=logs[0],
        log_k1=logs[1],
        log_k2=logs[2],
        exact=exact,
    )

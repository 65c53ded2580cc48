"""Dense univariate polynomials over a finite field.

Coefficients are stored in increasing degree order with trailing zeros
stripped, so equal polynomials have identical coefficient tuples.  The zero
polynomial has the empty tuple and its degree is the sentinel NEG_INF, which
compares strictly below every integer.
"""

from __future__ import annotations

from .field import Field

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int) or not 0 <= c < field.q:
                raise ValueError(f"coefficient {c!r} out of range for F_{field.q}")
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> "Poly":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls(field, (0,) * degree + (coeff,))

    @classmethod
    def decode(cls, field: Field, code: int) -> "Poly":
        """Inverse of encode: base-q digits become coefficients."""
        if code < 0:
            raise ValueError("encoding must be nonnegative")
        cs = []
        while code:
            cs.append(code % field.q)
            code //= field.q
        return cls(field, cs)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def encode(self) -> int:
        """Total-order key: coefficients as base-q digits, low degree first."""
        e = 0
        for c in reversed(self.coeffs):
            e = e * self.field.q + c
        return e

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise ValueError("mixed-field polynomial arithmetic")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, [f.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self):
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, [f.sub(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        f = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        if c == 0:
            return Poly.zero(f)
        if c == 1:
            return self
        return Poly(f, [f.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k == 0 or self.is_zero():
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("the zero polynomial cannot be made monic")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self.scale(self.field.inv(lead))

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {list(self.coeffs)!r})"


def pol_elements(field: Field, n: int):
    """All polynomials of degree < n, in increasing encoding order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for code in range(field.q ** n):
        yield Poly.decode(field, code)

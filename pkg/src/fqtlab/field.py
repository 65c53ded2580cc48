"""Exact arithmetic in small finite fields F_q with q = p^r.

Elements are plain integers in 0..q-1.  The integer encodes the coordinate
vector (c_0, ..., c_{r-1}) of the element over the power basis of the
modulus root, via c_0 + c_1*p + ... + c_{r-1}*p^(r-1).  For r = 1 this is
the usual residue encoding.  Addition is coordinate-wise mod p (plain XOR of
encodings in characteristic 2); multiplication for r > 1 goes through
log/antilog tables built once at construction, so steady-state cost is two
table lookups.
"""

from __future__ import annotations

from .errors import InputFormatError

#: Built-in moduli (coefficients in increasing degree, monic) used when no
#: explicit modulus is supplied for an extension field.  Frozen; see README.
DEFAULT_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),               # x^2 + x + 1
    8: (1, 1, 0, 1),            # x^3 + x + 1
    9: (1, 0, 1),               # x^2 + 1
    16: (1, 1, 0, 0, 1),        # x^4 + x + 1
    25: (2, 0, 1),              # x^2 + 2
    27: (1, 2, 0, 1),           # x^3 + 2x + 1
    32: (1, 0, 1, 0, 0, 1),     # x^5 + x^2 + 1
    49: (1, 0, 1),              # x^2 + 1
    64: (1, 1, 0, 0, 0, 0, 1),  # x^6 + x + 1
}

#: Orders above this are out of scope; dense tables would stop being cheap.
MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in (2, 3):
        if n % d == 0:
            return n == d
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of dense coefficient lists modulo p; den must be monic."""
    rem = list(num)
    dd = len(den) - 1
    while len(rem) > dd:
        c = rem[-1]
        if c:
            off = len(rem) - 1 - dd
            for k in range(dd):
                rem[off + k] = (rem[off + k] - c * den[k]) % p
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _monic_polys(p: int, degree: int):
    """All monic coefficient lists of the given degree over F_p."""
    total = p ** degree
    for code in range(total):
        coeffs = []
        c = code
        for _ in range(degree):
            coeffs.append(c % p)
            c //= p
        coeffs.append(1)
        yield coeffs


def is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    r = len(coeffs) - 1
    if r < 1 or coeffs[-1] % p != 1:
        return False
    mod = [c % p for c in coeffs]
    for d in range(1, r // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_rem(mod, cand, p):
                return False
    return True


class Field:
    """Arithmetic context for F_q; elements are ints in 0..q-1.

    Two fields compare equal iff they have the same characteristic, degree,
    and modulus, so elements of equal fields are interchangeable.
    """

    __slots__ = ("p", "r", "q", "modulus", "_digits", "_exp", "_log")

    def __init__(self, p: int, r: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p!r}")
        if not isinstance(r, int) or r < 1:
            raise ValueError(f"extension degree must be a positive integer, got {r!r}")
        q = p ** r
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds the supported maximum {MAX_ORDER}")
        self.p = p
        self.r = r
        self.q = q
        if r == 1:
            # modulus is an identity placeholder; any explicit value must at
            # least be a monic linear polynomial
            if modulus is not None:
                m = tuple(int(c) % p for c in modulus)
                if len(m) != 2 or m[1] != 1:
                    raise ValueError("modulus for a prime field must be monic of degree 1")
            self.modulus = (0, 1)
            self._digits = None
            self._exp = None
            self._log = None
            return
        if modulus is None:
            if q not in DEFAULT_MODULI:
                raise ValueError(
                    f"no built-in modulus for q={q}; pass one explicitly"
                )
            m = DEFAULT_MODULI[q]
        else:
            m = tuple(int(c) % p for c in modulus)
            if len(m) != r + 1:
                raise ValueError(f"modulus must have degree {r}, got degree {len(m) - 1}")
            if m[-1] != 1:
                raise ValueError("modulus must be monic")
        if not is_irreducible(m, p):
            raise ValueError(f"modulus {list(m)} is reducible over F_{p}")
        self.modulus = m
        self._digits = tuple(self._to_digits(e) for e in range(q))
        self._build_mul_tables()

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_spec(cls, spec: str, modulus: str | None = None) -> "Field":
        """Build a field from a textual spec like "3" or "2^3".

        ``modulus`` is an optional comma-separated coefficient list over F_p
        in increasing degree order.
        """
        text = spec.strip()
        if "^" in text:
            left, _, right = text.partition("^")
        else:
            left, right = text, "1"
        try:
            p = int(left.strip())
            r = int(right.strip())
        except ValueError:
            raise InputFormatError(f"bad field spec {spec!r}; expected p or p^r") from None
        mod = None
        if modulus is not None:
            try:
                mod = tuple(int(tok.strip()) for tok in modulus.split(","))
            except ValueError:
                raise InputFormatError(f"bad modulus {modulus!r}") from None
        try:
            return cls(p, r, mod)
        except ValueError as exc:
            raise InputFormatError(str(exc)) from None

    @property
    def spec_string(self) -> str:
        return f"{self.p}^{self.r}"

    def _to_digits(self, e: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            out.append(e % self.p)
            e //= self.p
        return tuple(out)

    def _from_digits(self, digits) -> int:
        e = 0
        for d in reversed(digits):
            e = e * self.p + d
        return e

    def _raw_mul(self, a: int, b: int) -> int:
        """Schoolbook product of digit polynomials reduced by the modulus.

        Used to seed the log tables and as an independent path for tests.
        """
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * self.r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_rem(prod, list(self.modulus), self.p)
        rem += [0] * (self.r - len(rem))
        return self._from_digits(rem)

    def _build_mul_tables(self) -> None:
        order = self.q - 1
        for g in range(2, self.q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._raw_mul(x, g)
            if len(exp) == order:
                log = [0] * self.q
                for i, v in enumerate(exp):
                    log[v] = i
                self._exp = tuple(exp)
                self._log = tuple(log)
                return
        raise AssertionError("no generator found; modulus is not irreducible")

    # -- element operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._digits[a], self._digits[b]
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.r == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._from_digits([(-x) % self.p for x in self._digits[a]])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def power(self, a: int, n: int) -> int:
        if n < 0:
            return self.power(self.inv(a), -n)
        if a == 0:
            return 1 if n == 0 else 0
        if self.r == 1:
            return pow(a, n, self.p)
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    def __repr__(self) -> str:
        if self.r == 1:
            return f"Field({self.p})"
        return f"Field({self.p}, {self.r}, modulus={list(self.modulus)})"

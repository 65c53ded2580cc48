"""Shannon entropy (base q) and the entropic distance between uniform sets.

The distance between sets A and B is H(X + Y) - (H(X) + H(Y)) / 2 with X, Y
independent and uniform on A and B.  Convolution weights stay exact, counts
of pairs over the common denominator |A| * |B|, and floats appear only in
the final logarithm evaluation.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import kernels
from .field import Field
from .poly import Poly
from .sets import PolySet, _codes, _pack_spec

TOL = 1e-9


class Distribution:
    """Finitely supported probability distribution over polynomials."""

    __slots__ = ("field", "probs")

    def __init__(self, field: Field, probs: dict):
        total = Fraction(0)
        clean = {}
        for value, pr in probs.items():
            if not isinstance(value, Poly) or value.field != field:
                raise ValueError("support must consist of polynomials over the field")
            pr = Fraction(pr)
            if pr < 0:
                raise ValueError(f"negative probability {pr} at {value}")
            if pr == 0:
                continue
            clean[value] = pr
            total += pr
        if abs(float(total) - 1.0) > TOL:
            raise ValueError(f"probabilities sum to {float(total)}, not 1")
        self.field = field
        self.probs = clean

    @classmethod
    def uniform(cls, A: PolySet) -> "Distribution":
        if not len(A):
            raise ValueError("uniform distribution needs a nonempty set")
        w = Fraction(1, len(A))
        return cls(A.field, {a: w for a in A})

    def support(self) -> list[Poly]:
        return sorted(self.probs, key=Poly.encode)

    def __len__(self) -> int:
        return len(self.probs)


def entropy(dist: Distribution) -> float:
    """Shannon entropy in base q, so the uniform law on Pol(n) scores n."""
    logq = math.log(dist.field.q)
    return -sum(float(p) * math.log(float(p)) for p in dist.probs.values()) / logq


def convolve(d1: Distribution, d2: Distribution) -> Distribution:
    """Law of X + Y for independent X ~ d1, Y ~ d2; exact rationals."""
    if d1.field != d2.field:
        raise ValueError("mixed-field convolution")
    out: dict[Poly, Fraction] = {}
    for x, px in d1.probs.items():
        for y, py in d2.probs.items():
            s = x + y
            out[s] = out.get(s, Fraction(0)) + px * py
    return Distribution(d1.field, out)


def sum_distribution(A: PolySet, B: PolySet) -> Distribution:
    """Exact law of the sum of independent uniforms on A and B."""
    return convolve(Distribution.uniform(A), Distribution.uniform(B))


def _entropy_from_counts(counts, total: int, q: int) -> float:
    acc = 0.0
    for c in counts:
        acc += c * math.log(c)
    return (math.log(total) - acc / total) / math.log(q)


def entropic_distance(A: PolySet, B: PolySet, backend: str | None = None) -> float:
    """d[A; B] = H(X + Y) - (H(X) + H(Y)) / 2 for independent uniforms.

    Always nonnegative and symmetric; zero when both sets are cosets of one
    subspace.  Satisfies the triangle inequality d[A;C] <= d[A;B] + d[B;C].
    """
    if A.field != B.field:
        raise ValueError("mixed-field distance")
    if not len(A) or not len(B):
        raise ValueError("distance needs nonempty sets")
    spec = _pack_spec(A, B)
    counts = kernels.pairwise_sum_counts(_codes(A, spec), _codes(B, spec),
                                         spec, backend=backend)
    q = A.field.q
    h_sum = _entropy_from_counts(counts.values(), len(A) * len(B), q)
    logq = math.log(q)
    return h_sum - (math.log(len(A)) + math.log(len(B))) / (2.0 * logq)

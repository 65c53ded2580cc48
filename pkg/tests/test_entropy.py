"""Entropy of sum laws: exact convolution route against the packed-count
route, frozen hand-computed distances, and the metric properties."""

import math
import random
from fractions import Fraction

import pytest

from fqtlab import (Distribution, Field, Poly, PolySet, convolve,
                    entropic_distance, entropy, sum_distribution, translate)
from fqtlab.kernels import HAVE_SPEEDUPS
from fqtlab.sets import doubling_stats

BACKENDS = ["pure", "compiled"] if HAVE_SPEEDUPS else ["pure"]


def _set(field, *codes):
    return PolySet(field, [Poly.decode(field, c) for c in codes])


def _random_set(field, rng, max_degree, size):
    limit = field.q ** (max_degree + 1)
    return PolySet(field, {Poly.decode(field, rng.randrange(limit))
                           for _ in range(size)})


def test_distribution_validation(f2, f3):
    one = Poly.one(f2)
    zero = Poly.zero(f2)
    d = Distribution(f2, {one: Fraction(1, 2), zero: Fraction(1, 2)})
    assert len(d) == 2
    with pytest.raises(ValueError):
        Distribution(f2, {one: Fraction(-1, 2), zero: Fraction(3, 2)})
    with pytest.raises(ValueError):
        Distribution(f2, {one: Fraction(1, 3)})  # does not sum to 1
    with pytest.raises(ValueError):
        Distribution(f2, {Poly.one(f3): Fraction(1)})
    with pytest.raises(ValueError):
        Distribution(f2, {"x": Fraction(1)})
    # zero-weight points are dropped from the support
    d2 = Distribution(f2, {one: Fraction(1), zero: Fraction(0)})
    assert d2.support() == [one]


def test_uniform(f2):
    A = _set(f2, 0, 1, 2)
    u = Distribution.uniform(A)
    assert all(p == Fraction(1, 3) for p in u.probs.values())
    assert u.support() == list(A)
    with pytest.raises(ValueError):
        Distribution.uniform(PolySet(f2))


def test_entropy_of_uniform_pol(f2, f3):
    # base-q entropy of the uniform law on Pol(n) is exactly n
    for field in (f2, f3):
        for n in range(5):
            u = Distribution.uniform(PolySet.pol(field, n))
            assert entropy(u) == pytest.approx(n, abs=1e-12)


def test_entropy_of_uniform_set(f2):
    A = _set(f2, 0, 1, 2)
    assert entropy(Distribution.uniform(A)) == pytest.approx(
        math.log(3) / math.log(2), abs=1e-12)
    point = Distribution.uniform(_set(f2, 5))
    assert entropy(point) == pytest.approx(0.0, abs=1e-12)


def test_convolution_frozen(f2):
    # {0, 1, t} + {0, 1, t}: nine ordered pairs, the zero sum occurs three times
    A = _set(f2, 0, 1, 2)
    s = sum_distribution(A, A)
    expected = {0: Fraction(3, 9), 1: Fraction(2, 9),
                2: Fraction(2, 9), 3: Fraction(2, 9)}
    assert {v.encode(): pr for v, pr in s.probs.items()} == expected


def test_convolve_is_exact_and_commutative(f3):
    rng = random.Random(73)
    A = _random_set(f3, rng, 2, 6)
    B = _random_set(f3, rng, 2, 6)
    d1 = convolve(Distribution.uniform(A), Distribution.uniform(B))
    d2 = convolve(Distribution.uniform(B), Distribution.uniform(A))
    assert d1.probs == d2.probs
    assert sum(d1.probs.values()) == 1
    with pytest.raises(ValueError):
        convolve(Distribution.uniform(A), Distribution.uniform(_set(Field(2), 1)))


def test_distance_frozen_values(f2, f3):
    A = _set(f2, 0, 1, 2)
    assert entropic_distance(A, A) == pytest.approx(0.38997500048077094,
                                                    abs=1e-12)
    B = _set(f3, 0, 1)
    assert entropic_distance(B, B) == pytest.approx(0.31546487678572854,
                                                    abs=1e-12)


def test_distance_zero_on_subspaces(f2, f3):
    from fqtlab import Subspace

    for field in (f2, f3):
        for n in range(1, 5):
            A = PolySet.from_subspace(Subspace.pol(field, n))
            assert abs(entropic_distance(A, A)) <= 1e-9
    # cosets of the same subspace are also at distance zero
    A = PolySet.from_subspace(Subspace.pol(f2, 2))
    B = translate(A, Poly.monomial(f2, 4))
    assert abs(entropic_distance(A, B)) <= 1e-9


@pytest.mark.parametrize("backend", BACKENDS)
def test_routes_agree(f2, f3, f9, backend):
    rng = random.Random(79)
    logs = {f.q: math.log(f.q) for f in (f2, f3, f9)}
    for field in (f2, f3, f9):
        for _ in range(8):
            A = _random_set(field, rng, 3, rng.randint(1, 12))
            B = _random_set(field, rng, 3, rng.randint(1, 12))
            fast = entropic_distance(A, B, backend=backend)
            logq = logs[field.q]
            slow = entropy(sum_distribution(A, B)) - \
                (math.log(len(A)) + math.log(len(B))) / (2 * logq)
            assert fast == pytest.approx(slow, abs=1e-12)


def test_distance_symmetric_and_nonnegative(f3):
    rng = random.Random(83)
    for _ in range(10):
        A = _random_set(f3, rng, 3, rng.randint(1, 10))
        B = _random_set(f3, rng, 3, rng.randint(1, 10))
        d = entropic_distance(A, B)
        assert d >= -1e-12
        assert d == pytest.approx(entropic_distance(B, A), abs=1e-12)


def test_triangle_inequality_small(f2):
    rng = random.Random(89)
    for _ in range(10):
        A, B, C = (_random_set(f2, rng, 3, rng.randint(1, 10)) for _ in range(3))
        d_ab = entropic_distance(A, B)
        d_bc = entropic_distance(B, C)
        d_ac = entropic_distance(A, C)
        assert d_ac <= d_ab + d_bc + 1e-9


def test_self_distance_bounded_by_doubling(f2, f3):
    rng = random.Random(97)
    for field in (f2, f3):
        for _ in range(10):
            A = _random_set(field, rng, 3, rng.randint(1, 12))
            d = entropic_distance(A, A)
            bound = math.log(float(doubling_stats(A).k1)) / math.log(field.q)
            assert d <= bound + 1e-9


def test_distance_validation(f2, f3):
    A = _set(f2, 0, 1)
    with pytest.raises(ValueError):
        entropic_distance(A, _set(f3, 0, 1))
    with pytest.raises(ValueError):
        entropic_distance(A, PolySet(f2))

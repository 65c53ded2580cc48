"""Property-based checks of the algebraic invariants.

Each test draws a small field and random data, then asserts a law that must
hold identically: canonical-form idempotence, the rank = growth identity,
sumset cardinality bounds, covering contracts, and the entropy metric axioms.
"""

import math
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from fqtlab import (Field, Poly, PolySet, decompose, difference_set, dilate,
                    doubling_stats, entropic_distance, iterated_sumset,
                    ruzsa_cover, span, sumset, verify_decomposition)
from fqtlab.kernels import PackSpec, add_codes, negate_code, pack_coeffs, unpack_coeffs

FIELDS = [Field(2), Field(3), Field(2, 2)]
WIDE_FIELDS = FIELDS + [Field(5), Field(3, 2)]

fields = st.sampled_from(FIELDS)
wide_fields = st.sampled_from(WIDE_FIELDS)

# one field per example, shared by every drawn space or set
shared_field = st.shared(fields, key="field")


@st.composite
def spaces(draw, max_degree=6, max_gens=4):
    field = draw(shared_field)
    limit = field.q ** (max_degree + 1)
    count = draw(st.integers(0, max_gens))
    gens = [Poly.decode(field, draw(st.integers(0, limit - 1)))
            for _ in range(count)]
    return span(field, gens)


@st.composite
def polysets(draw, max_degree=3, max_size=10, min_size=1):
    field = draw(shared_field)
    limit = field.q ** (max_degree + 1)
    codes = draw(st.sets(st.integers(0, limit - 1),
                         min_size=min_size, max_size=max_size))
    return PolySet(field, [Poly.decode(field, c) for c in codes])


@given(spaces())
@settings(max_examples=80, deadline=None)
def test_span_is_idempotent_and_canonical(V):
    assert span(V.field, V.basis) == V
    degs = V.degrees()
    assert all(a < b for a, b in zip(degs, degs[1:]))
    for i, b in enumerate(V.basis):
        assert b.lead() == 1
        for j, other in enumerate(V.basis):
            if i != j:
                assert b.coeff(other.degree) == 0


@given(spaces())
@settings(max_examples=80, deadline=None)
def test_weak_dim_within_bounds(V):
    w = V.weak_dim()
    assert 0 <= w <= V.dim
    assert (w == 0) == (V.dim == 0)


@given(spaces())
@settings(max_examples=80, deadline=None)
def test_decomposition_is_minimal_and_valid(V):
    dec = decompose(V)
    report = verify_decomposition(V, dec)
    assert report.all_ok
    assert dec.rank == V.weak_dim()


@given(spaces(max_degree=4), st.integers(1, 80))
@settings(max_examples=60, deadline=None)
def test_rank_is_dilation_invariant(V, code):
    c = Poly.decode(V.field, code % (V.field.q ** 3))
    if c.is_zero():
        c = Poly.one(V.field)
    D = V.dilate(c)
    assert D.weak_dim() == V.weak_dim()
    assert decompose(D).rank == decompose(V).rank


@given(polysets(), polysets())
@settings(max_examples=60, deadline=None)
def test_sumset_laws(A, B):
    S = sumset(A, B)
    assert S == sumset(B, A)
    assert max(len(A), len(B)) <= len(S) <= len(A) * len(B)
    zero = PolySet(A.field, [Poly.zero(A.field)])
    assert sumset(A, zero) == A
    assert Poly.zero(A.field) in difference_set(A, A)
    assert len(difference_set(A, B)) == len(difference_set(B, A))


@given(polysets(max_size=6), polysets(max_size=6), polysets(max_size=6))
@settings(max_examples=40, deadline=None)
def test_sumset_associative(A, B, C):
    assert sumset(sumset(A, B), C) == sumset(A, sumset(B, C))


@given(polysets(max_size=12))
@settings(max_examples=40, deadline=None)
def test_plunnecke_triple_bound(A):
    # |A+A| <= K|A| forces |A+A+A| <= K^3 |A|; checked with exact rationals
    k1 = doubling_stats(A).k1
    triple = len(iterated_sumset(A, 3))
    assert Fraction(triple) <= k1 ** 3 * len(A)


@given(polysets(max_size=8), polysets(max_size=8), polysets(max_size=8))
@settings(max_examples=40, deadline=None)
def test_ruzsa_triangle_for_sets(A, B, C):
    # |A-C| |B| <= |A-B| |B-C|
    lhs = len(difference_set(A, C)) * len(B)
    rhs = len(difference_set(A, B)) * len(difference_set(B, C))
    assert lhs <= rhs


@given(polysets(), polysets())
@settings(max_examples=60, deadline=None)
def test_cover_contracts(A, B):
    X = ruzsa_cover(A, B)
    diff = difference_set(A, A)
    assert all(x in B for x in X)
    assert all(any((b - x) in diff for x in X) for b in B)
    assert len(X) * len(A) <= len(sumset(A, B))


@given(polysets(max_size=8), polysets(max_size=8))
@settings(max_examples=40, deadline=None)
def test_entropy_metric_axioms(A, B):
    d = entropic_distance(A, B)
    assert d >= -1e-12
    assert abs(d - entropic_distance(B, A)) <= 1e-12
    dd = entropic_distance(A, A)
    bound = math.log(float(doubling_stats(A).k1)) / math.log(A.field.q)
    assert dd <= bound + 1e-9


@given(wide_fields, st.data())
@settings(max_examples=80, deadline=None)
def test_pack_roundtrip_and_homomorphism(field, data):
    n = data.draw(st.integers(1, 6))
    spec = PackSpec.for_field(field, n)
    xs = [data.draw(st.integers(0, field.q - 1)) for _ in range(n)]
    ys = [data.draw(st.integers(0, field.q - 1)) for _ in range(n)]
    cx, cy = pack_coeffs(spec, xs), pack_coeffs(spec, ys)
    assert unpack_coeffs(spec, cx) == xs
    sums = [field.add(a, b) for a, b in zip(xs, ys)]
    assert add_codes(spec, cx, cy) == pack_coeffs(spec, sums)
    negs = [field.neg(a) for a in xs]
    assert negate_code(spec, cx) == pack_coeffs(spec, negs)
    assert add_codes(spec, cx, negate_code(spec, cx)) == 0


@given(spaces(max_degree=4), st.integers(0, 200))
@settings(max_examples=50, deadline=None)
def test_progression_membership_matches_enumeration(V, base_code):
    base = Poly.decode(V.field, base_code)
    prog = decompose(V).to_progression(base=base)
    elems = set(prog.enumerate_elements(cap=100_000))
    assert len(elems) == V.size  # block decompositions are proper
    for x in list(elems)[:16]:
        assert prog.member(x)
    outside = Poly.monomial(V.field, 9).shift(1) + base
    assert prog.member(outside) == (outside in elems)

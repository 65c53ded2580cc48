"""Acceptance gate.

One test per acceptance criterion; each prints a single pass/fail line
(run with ``pytest tests/test_acceptance.py -s`` to see them) and then
asserts.  Tolerances and runtime budgets are stated inline.
"""

import time
from pathlib import Path

from fqtlab import (CampaignConfig, Field, Poly, PolySet, Subspace, decompose,
                    dilate, dilate_example, entropic_distance, galois_number,
                    gaussian_binomial, growth_report, iter_subspaces,
                    run_cover_campaign, run_decomposition_campaign,
                    run_entropy_campaign, struct_dim_oracle, sumset,
                    verify_decomposition)


def _line(num, label, ok):
    print(f"criterion {num} [{label}]: {'PASS' if ok else 'FAIL'}")
    return ok


def test_criterion_1_exhaustive_lattice():
    """Every subspace of Pol(4) and Pol(5) over F_2: decomposition length
    equals the growth dimension, spans match, sums are direct; counts
    cross-checked against the Gaussian-binomial totals; under 10 s."""
    f2 = Field(2)
    start = time.monotonic()
    failures = 0
    counts_ok = True
    for n in (4, 5):
        by_dim = {}
        for V in iter_subspaces(f2, n):
            report = verify_decomposition(V, decompose(V))
            if not (report.all_ok and report.minimal):
                failures += 1
            by_dim[V.dim] = by_dim.get(V.dim, 0) + 1
        counts_ok = counts_ok and sum(by_dim.values()) == galois_number(n, 2)
        counts_ok = counts_ok and all(
            by_dim.get(k, 0) == gaussian_binomial(n, k, 2) for k in range(n + 1))
    elapsed = time.monotonic() - start
    ok = failures == 0 and counts_ok and elapsed < 10.0
    assert _line(1, "exhaustive Pol(4)+Pol(5) over F_2", ok)
    assert failures == 0
    assert counts_ok
    assert elapsed < 10.0, f"took {elapsed:.2f}s"


def test_criterion_2_oracle_equivalence():
    """For every subspace of dimension <= 3 inside Pol(4) over F_2 and F_3,
    the exhaustive minimal-cover search, the greedy decomposition length,
    and the growth dimension agree exactly."""
    discrepancies = 0
    checked = 0
    for field in (Field(2), Field(3)):
        for V in iter_subspaces(field, 4, dims=range(4)):
            rank = decompose(V).rank
            if not (struct_dim_oracle(V) == rank == V.weak_dim()):
                discrepancies += 1
            checked += 1
    ok = discrepancies == 0 and checked == sum(
        gaussian_binomial(4, k, q) for q in (2, 3) for k in range(4))
    assert _line(2, "search oracle = greedy rank = growth dim", ok)
    assert discrepancies == 0
    assert checked == 66 + 211


def test_criterion_3_randomized_campaign():
    """1000 seeded random subspaces (dim <= 8, degrees <= 16) over each of
    F_2, F_3, F_4: zero failures, under 60 s total."""
    start = time.monotonic()
    results = {}
    for spec in ("2^1", "3^1", "2^2"):
        config = CampaignConfig(field_spec=spec, samples=1000, max_dim=8,
                                max_degree=16, seed=42)
        results[spec] = run_decomposition_campaign(config)
    elapsed = time.monotonic() - start
    failures = sum(len(r.failures) for r in results.values())
    ok = failures == 0 and all(r.samples == 1000 for r in results.values()) \
        and elapsed < 60.0
    assert _line(3, "3x1000 seeded random subspaces", ok)
    assert failures == 0, {k: r.failures[:3] for k, r in results.items()}
    assert elapsed < 60.0, f"took {elapsed:.2f}s"
    # the cross-checking oracle must actually have run on a decent share
    assert all(r.oracle_checked > 100 for r in results.values())


def test_criterion_4_flagship_sizes():
    """Exact sizes: |Pol(n) + t Pol(n)| = q^(n+1) for (q, n) in
    {(2,3), (3,3), (4,2)}, and the spread space span{1, t^2, t^4} over F_2
    has |A+A| = |A| = 8 but |A+tA| = 64 = |A|^2."""
    ok = True
    for spec, n in (("2^1", 3), ("3^1", 3), ("2^2", 2)):
        field = Field.from_spec(spec)
        A = PolySet.pol(field, n)
        t = Poly.monomial(field, 1)
        ok = ok and len(sumset(A, dilate(A, t))) == field.q * len(A)
    f2 = Field(2)
    V = Subspace.span(f2, [Poly.one(f2), Poly.monomial(f2, 2),
                           Poly.monomial(f2, 4)])
    A = PolySet.from_subspace(V)
    t = Poly.monomial(f2, 1)
    ok = ok and len(A) == 8
    ok = ok and len(sumset(A, A)) == 8
    ok = ok and len(sumset(A, dilate(A, t))) == 64 == len(A) ** 2
    assert _line(4, "q-growth of Pol(n); square growth of the spread space", ok)
    assert ok


def test_criterion_5_constructed_family():
    """dilate_example(p, n, m) for (2,1,1), (2,2,2), (2,2,3), (3,1,2):
    |A| = p^(nm), |A+tA| = p^n |A|, |A+uA| = p^m |A|, and the two growth
    exponents multiply to log_p |A| exactly; under 5 s."""
    start = time.monotonic()
    ok = True
    for p, n, m in ((2, 1, 1), (2, 2, 2), (2, 2, 3), (3, 1, 2)):
        rep = growth_report(dilate_example(p, n, m))
        ok = ok and rep.size == p ** (n * m)
        ok = ok and rep.t_sum_size == p ** n * rep.size
        ok = ok and rep.u_sum_size == p ** m * rep.size
        ok = ok and rep.exact and rep.log_k1 * rep.log_k2 == rep.log_size
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 5.0
    assert _line(5, "two-variable family: exact growth exponents", ok)
    assert ok
    assert elapsed < 5.0, f"took {elapsed:.2f}s"


def test_criterion_6_covering_contract():
    """500 seeded random pairs (A, B) with |A|, |B| <= 64: the greedy cover
    X satisfies B within A - A + X and |X| |A| <= |A+B|; zero violations."""
    r2 = run_cover_campaign(Field(2), seed=1106, pairs=250, max_size=64)
    r3 = run_cover_campaign(Field(3), seed=1107, pairs=250, max_size=64)
    checked = r2.checked + r3.checked
    violations = r2.violations + r3.violations
    ok = checked == 500 and not violations
    assert _line(6, "covering contracts on 500 seeded pairs", ok)
    assert checked == 500
    assert violations == []


def test_criterion_7_entropy_properties():
    """Distance of a uniform subspace law to itself is 0 within 1e-9 for
    Pol(n), n <= 6, over F_2 and F_3; nonnegativity, the triangle
    inequality, and the self-distance doubling bound hold within 1e-9 on
    500 seeded random triples."""
    ok = True
    worst = 0.0
    for field in (Field(2), Field(3)):
        for n in range(7):
            A = PolySet.pol(field, n)
            d = abs(entropic_distance(A, A))
            worst = max(worst, d)
            ok = ok and d <= 1e-9
    r2 = run_entropy_campaign(Field(2), seed=2106, triples=250, tol=1e-9)
    r3 = run_entropy_campaign(Field(3), seed=2107, triples=250, tol=1e-9)
    ok = ok and r2.checked + r3.checked == 500
    ok = ok and not r2.violations and not r3.violations
    assert _line(7, "entropy axioms: self-distance, triangle, doubling", ok)
    assert worst <= 1e-9
    assert r2.violations == [] and r3.violations == []
    assert r2.checked + r3.checked == 500


def test_criterion_8_scope_is_documented():
    """The general covering statements for arbitrary sets of bounded doubling
    rest on ineffective absolute constants, so they are out of scope at this
    size; the README must say so and point at the property suites and
    constructed families that replace them."""
    readme = Path(__file__).resolve().parents[1] / "README.md"
    text = readme.read_text(encoding="utf-8").lower()
    ok = "## scope and limitations" in text
    for needle in ("constant", "covering", "property", "constructed"):
        ok = ok and needle in text
    assert _line(8, "scope boundary documented in the README", ok)
    assert ok

"""Seeded verification campaigns.

Every campaign threads a single random.Random(seed) sequentially, so a given
configuration reproduces the same samples and the same structured output
byte for byte.
"""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from dataclasses import dataclass, field as dc_field

from .decompose import OracleLimits, decompose, struct_dim_oracle, verify_decomposition
from .entropy import entropic_distance
from .errors import ResourceLimitError
from .field import Field
from .poly import Poly
from .sets import PolySet, doubling_stats, difference_set, ruzsa_cover, sumset
from .spaces import Subspace


def random_subspace(field: Field, rng: random.Random, max_dim: int,
                    max_degree: int) -> Subspace:
    """Uniform reduced echelon basis: uniform dimension, uniform pivot-degree
    set, uniform free coefficients."""
    if max_dim > max_degree + 1:
        raise ValueError("max_dim cannot exceed max_degree + 1")
    dim = rng.randint(0, max_dim)
    pivots = sorted(rng.sample(range(max_degree + 1), dim))
    pivset = set(pivots)
    rows = []
    for d in pivots:
        coeffs = [0] * (d + 1)
        coeffs[d] = 1
        for e in range(d):
            if e not in pivset:
                coeffs[e] = rng.randrange(field.q)
        rows.append(Poly(field, coeffs))
    V = Subspace.span(field, rows)
    assert V.degrees() == tuple(pivots)
    return V


def random_polyset(field: Field, rng: random.Random, max_degree: int,
                   size: int) -> PolySet:
    """Up to `size` distinct uniform polynomials of degree <= max_degree."""
    limit = field.q ** (max_degree + 1)
    return PolySet(field, {Poly.decode(field, rng.randrange(limit))
                           for _ in range(size)})


@dataclass(frozen=True)
class CampaignConfig:
    field_spec: str = "2^1"
    modulus: str | None = None
    samples: int = 1000
    max_dim: int = 8
    max_degree: int = 16
    seed: int = 0
    oracle_cap: int = 81        # exhaustive oracle runs only when q**dim <= this
    oracle_nodes: int = 100_000


@dataclass
class CampaignResult:
    config: CampaignConfig
    samples: int = 0
    failures: list = dc_field(default_factory=list)
    cells: Counter = dc_field(default_factory=Counter)  # (dim, rank) -> count
    oracle_checked: int = 0
    oracle_skipped: int = 0
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        cells = {f"{dim}/{rank}": count
                 for (dim, rank), count in sorted(self.cells.items())}
        return {
            "field": self.config.field_spec,
            "samples": self.samples,
            "seed": self.config.seed,
            "max_dim": self.config.max_dim,
            "max_degree": self.config.max_degree,
            "failures": self.failures,
            "cells": cells,
            "oracle_checked": self.oracle_checked,
            "oracle_skipped": self.oracle_skipped,
            "ok": self.ok,
        }


def run_decomposition_campaign(config: CampaignConfig) -> CampaignResult:
    """Sample subspaces, decompose, verify, and cross-check the oracle."""
    fld = Field.from_spec(config.field_spec, config.modulus)
    rng = random.Random(config.seed)
    result = CampaignResult(config=config)
    start = time.monotonic()
    limits = OracleLimits(max_points=max(config.oracle_cap, 1),
                          max_nodes=config.oracle_nodes)
    for index in range(config.samples):
        V = random_subspace(fld, rng, config.max_dim, config.max_degree)
        dec = decompose(V)
        report = verify_decomposition(V, dec)
        ok = report.all_ok and report.minimal
        oracle_rank = None
        if config.oracle_cap and V.size <= config.oracle_cap:
            try:
                oracle_rank = struct_dim_oracle(V, limits)
                result.oracle_checked += 1
                ok = ok and oracle_rank == report.rank
            except ResourceLimitError:
                result.oracle_skipped += 1
        result.samples += 1
        result.cells[(V.dim, report.rank)] += 1
        if not ok:
            result.failures.append({
                "index": index,
                "basis": [str(b) for b in V.basis],
                "rank": report.rank,
                "weak_dim": report.weak_dim,
                "ordering_ok": report.ordering_ok,
                "direct_ok": report.direct_ok,
                "span_ok": report.span_ok,
                "oracle_rank": oracle_rank,
            })
    result.elapsed = time.monotonic() - start
    return result


@dataclass
class PairCampaignResult:
    checked: int = 0
    violations: list = dc_field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations


def run_cover_campaign(field: Field, seed: int, pairs: int,
                       max_size: int = 64, max_degree: int = 8) -> PairCampaignResult:
    """Random pairs (A, B); checks both covering contracts on each."""
    rng = random.Random(seed)
    result = PairCampaignResult()
    start = time.monotonic()
    for index in range(pairs):
        A = random_polyset(field, rng, max_degree, rng.randint(1, max_size))
        B = random_polyset(field, rng, max_degree, rng.randint(1, max_size))
        X = ruzsa_cover(A, B)
        diff = difference_set(A, A)
        covered = all(any((b - x) in diff for x in X) for b in B)
        bound = len(X) * len(A) <= len(sumset(A, B))
        subset = all(x in B for x in X)
        result.checked += 1
        if not (covered and bound and subset):
            result.violations.append({
                "index": index,
                "covered": covered,
                "bound": bound,
                "subset": subset,
            })
    result.elapsed = time.monotonic() - start
    return result


def run_entropy_campaign(field: Field, seed: int, triples: int,
                         max_size: int = 32, max_degree: int = 6,
                         tol: float = 1e-9) -> PairCampaignResult:
    """Random triples (A, B, C); checks nonnegativity, the triangle
    inequality, and the self-distance doubling bound."""
    rng = random.Random(seed)
    result = PairCampaignResult()
    start = time.monotonic()
    logq = math.log(field.q)
    for index in range(triples):
        sets = [random_polyset(field, rng, max_degree, rng.randint(1, max_size))
                for _ in range(3)]
        A, B, C = sets
        d_ab = entropic_distance(A, B)
        d_bc = entropic_distance(B, C)
        d_ac = entropic_distance(A, C)
        bad = {}
        if min(d_ab, d_bc, d_ac) < -tol:
            bad["nonneg"] = min(d_ab, d_bc, d_ac)
        for name, lhs, rhs in (
            ("ac<=ab+bc", d_ac, d_ab + d_bc),
            ("ab<=ac+cb", d_ab, d_ac + d_bc),
            ("bc<=ba+ac", d_bc, d_ab + d_ac),
        ):
            if lhs > rhs + tol:
                bad[name] = lhs - rhs
        for S in sets:
            stats = doubling_stats(S)
            self_dist = entropic_distance(S, S)
            bound = math.log(float(stats.k1)) / logq
            if self_dist > bound + tol:
                bad["self-doubling"] = self_dist - bound
        result.checked += 1
        if bad:
            bad["index"] = index
            result.violations.append(bad)
    result.elapsed = time.monotonic() - start
    return result

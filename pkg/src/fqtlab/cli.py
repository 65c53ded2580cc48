"""Command line interface.

Exit codes: 0 all checks passed, 1 a verification failed, 2 malformed
input, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from .bivariate import dilate_example, growth_report
from .campaign import CampaignConfig, run_decomposition_campaign
from .decompose import decompose, verify_decomposition
from .entropy import entropic_distance
from .errors import InputFormatError, ResourceLimitError
from .field import Field
from .formats import load_set, load_space
from .sets import doubling_stats, ruzsa_cover, sumset
from .spaces import galois_number, gaussian_binomial, iter_subspaces

PASS, FAIL, BAD_INPUT, OVER_LIMIT = 0, 1, 2, 3


def _emit(args, record: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(record, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_decompose(args) -> int:
    field, gens, V = load_space(args.file)
    dec = decompose(V)
    report = verify_decomposition(V, dec)
    ok = report.all_ok and report.minimal
    record = {
        "field": field.spec_string,
        "generators": [str(g) for g in gens],
        "basis": [str(b) for b in V.basis],
        "dim": V.dim,
        "weak_dim": report.weak_dim,
        "blocks": dec.block_records(),
        "rank": dec.rank,
        "checks": {
            "ordering": report.ordering_ok,
            "direct": report.direct_ok,
            "span": report.span_ok,
        },
        "minimal": report.minimal,
        "ok": ok,
    }
    lines = [f"field: {field.spec_string}",
             "basis: " + (" ".join(str(b) for b in V.basis) or "(zero space)"),
             f"dim: {V.dim}",
             f"weak_dim: {report.weak_dim}",
             "blocks: " + (" ".join(f"(d={b.width}, y={b.gen})" for b in dec.blocks)
                           or "(none)"),
             f"rank: {dec.rank}",
             f"checks: ordering={report.ordering_ok} direct={report.direct_ok} "
             f"span={report.span_ok} minimal={report.minimal}",
             f"verdict: {'ok' if ok else 'FAIL'}"]
    _emit(args, record, lines)
    return PASS if ok else FAIL


def cmd_verify_exhaustive(args) -> int:
    field = Field.from_spec(args.field, args.modulus)
    n = args.degree
    expected_total = galois_number(n, field.q)
    if expected_total > args.cap:
        raise ResourceLimitError(
            f"Pol({n}) over F_{field.q} has {expected_total} subspaces, "
            f"above the cap of {args.cap}")
    start = time.monotonic()
    cells: dict[tuple[int, int], int] = {}
    by_dim: dict[int, int] = {}
    failures = 0
    for V in iter_subspaces(field, n):
        dec = decompose(V)
        report = verify_decomposition(V, dec)
        if not (report.all_ok and report.minimal):
            failures += 1
        cells[(V.dim, report.rank)] = cells.get((V.dim, report.rank), 0) + 1
        by_dim[V.dim] = by_dim.get(V.dim, 0) + 1
    elapsed = time.monotonic() - start
    count_ok = (sum(by_dim.values()) == expected_total and
                all(by_dim.get(k, 0) == gaussian_binomial(n, k, field.q)
                    for k in range(n + 1)))
    ok = failures == 0 and count_ok
    record = {
        "field": field.spec_string,
        "degree": n,
        "subspaces": sum(by_dim.values()),
        "expected_subspaces": expected_total,
        "count_check": count_ok,
        "cells": {f"{dim}/{rank}": c for (dim, rank), c in sorted(cells.items())},
        "failures": failures,
        "elapsed_s": round(elapsed, 3),
        "ok": ok,
    }
    lines = [f"field: {field.spec_string}",
             f"subspaces of Pol({n}): {sum(by_dim.values())} "
             f"(expected {expected_total}, match={count_ok})",
             "dim/rank cells: " + " ".join(
                 f"{dim}/{rank}:{c}" for (dim, rank), c in sorted(cells.items())),
             f"failures: {failures}",
             f"elapsed: {elapsed:.3f}s",
             f"verdict: {'ok' if ok else 'FAIL'}"]
    _emit(args, record, lines)
    return PASS if ok else FAIL


def cmd_random_verify(args) -> int:
    config = CampaignConfig(
        field_spec=args.field,
        modulus=args.modulus,
        samples=args.samples,
        max_dim=args.max_dim,
        max_degree=args.max_degree,
        seed=args.seed,
        oracle_cap=args.oracle_cap,
    )
    result = run_decomposition_campaign(config)
    record = result.to_record()
    lines = [f"field: {config.field_spec}",
             f"samples: {result.samples} (seed {config.seed}, "
             f"dim<={config.max_dim}, deg<={config.max_degree})",
             f"oracle: checked={result.oracle_checked} skipped={result.oracle_skipped}",
             f"failures: {len(result.failures)}",
             f"elapsed: {result.elapsed:.3f}s",
             f"verdict: {'ok' if result.ok else 'FAIL'}"]
    _emit(args, record, lines)
    return PASS if result.ok else FAIL


def cmd_sumset_stats(args) -> int:
    field, A = load_set(args.file)
    if not len(A):
        raise InputFormatError("set file contains no elements")
    stats = doubling_stats(A, cap=args.cap)
    record = {"field": field.spec_string, **stats.to_record()}
    lines = [f"field: {field.spec_string}",
             f"|A|: {stats.size}",
             f"|A+A|: {stats.sum_size}",
             f"|A-A|: {stats.diff_size}",
             f"|A+tA|: {stats.dilate_sum_size}",
             f"K1 = |A+A|/|A| = {stats.k1}",
             f"K2 = |A+tA|/|A| = {stats.k2}"]
    _emit(args, record, lines)
    return PASS


def cmd_dilate_example(args) -> int:
    p, n, m = args.p, args.n, args.m
    A = dilate_example(p, n, m, cap=args.cap)
    report = growth_report(A, cap=args.cap)
    expected = {
        "size": p ** (n * m),
        "t_sum_size": p ** n * p ** (n * m),
        "u_sum_size": p ** m * p ** (n * m),
    }
    formulas_ok = (report.size == expected["size"]
                   and report.t_sum_size == expected["t_sum_size"]
                   and report.u_sum_size == expected["u_sum_size"])
    product_ok = report.exact and report.log_product == report.log_size
    ok = formulas_ok and product_ok
    record = {"p": p, "n": n, "m": m, **report.to_record(),
              "expected": expected, "formulas_ok": formulas_ok,
              "product_ok": product_ok, "ok": ok}
    lines = [f"construction: p={p} n={n} m={m}",
             f"|A| = {report.size} (expected {expected['size']})",
             f"|A+tA| = {report.t_sum_size} (expected {expected['t_sum_size']})",
             f"|A+uA| = {report.u_sum_size} (expected {expected['u_sum_size']})",
             f"log_p K1 = {report.log_k1}, log_p K2 = {report.log_k2}, "
             f"product = {report.log_product}, log_p |A| = {report.log_size}",
             f"verdict: {'ok' if ok else 'FAIL'}"]
    _emit(args, record, lines)
    return PASS if ok else FAIL


def cmd_entropy(args) -> int:
    field, A = load_set(args.file)
    if args.other is not None:
        other_field, B = load_set(args.other)
        if other_field != field:
            raise InputFormatError("the two set files use different fields")
    else:
        B = A
    if not len(A) or not len(B):
        raise InputFormatError("entropy needs nonempty sets")
    logq = math.log(field.q)
    h_a = math.log(len(A)) / logq
    h_b = math.log(len(B)) / logq
    dist = entropic_distance(A, B)
    record = {"field": field.spec_string, "size_a": len(A), "size_b": len(B),
              "h_a": h_a, "h_b": h_b, "distance": dist}
    lines = [f"field: {field.spec_string}",
             f"H(U_A) = {h_a:.9f} (|A| = {len(A)})",
             f"H(U_B) = {h_b:.9f} (|B| = {len(B)})",
             f"d[U_A; U_B] = {dist:.9f}"]
    _emit(args, record, lines)
    return PASS


def cmd_cover(args) -> int:
    field, A = load_set(args.file_a)
    field_b, B = load_set(args.file_b)
    if field_b != field:
        raise InputFormatError("the two set files use different fields")
    if not len(A):
        raise InputFormatError("covering needs a nonempty A")
    X = ruzsa_cover(A, B, cap=args.cap)
    bound = len(sumset(A, B, cap=args.cap))
    ok = len(X) * len(A) <= bound
    record = {"field": field.spec_string, "size_a": len(A), "size_b": len(B),
              "cover": [str(x) for x in X], "cover_size": len(X),
              "sum_size": bound, "ok": ok}
    lines = [f"field: {field.spec_string}",
             f"|A| = {len(A)}, |B| = {len(B)}, |A+B| = {bound}",
             "X = " + (" ".join(str(x) for x in X) or "(empty)"),
             f"|X| = {len(X)} <= |A+B|/|A| = {bound}/{len(A)}",
             f"verdict: {'ok' if ok else 'FAIL'}"]
    _emit(args, record, lines)
    return PASS if ok else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqtlab",
        description="Sumsets, dilates, and canonical progression decompositions "
                    "for finite subspaces of F_q[t].")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, field=False):
        p.add_argument("--json", action="store_true", help="structured output")
        p.add_argument("--cap", type=int, default=1_000_000,
                       help="resource cap (elements or subspace count)")
        if field:
            p.add_argument("--field", default="2^1", help="field spec p^r")
            p.add_argument("--modulus", default=None,
                           help="comma-separated modulus coefficients over F_p")

    p = sub.add_parser("decompose", help="decompose the space spanned by a file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify-exhaustive",
                       help="decompose every subspace of Pol(n)")
    p.add_argument("-n", "--degree", type=int, required=True)
    common(p, field=True)
    p.set_defaults(func=cmd_verify_exhaustive)

    p = sub.add_parser("random-verify", help="seeded random subspace campaign")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-dim", type=int, default=8)
    p.add_argument("--max-degree", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-cap", type=int, default=81,
                   help="run the exhaustive oracle when q^dim <= this")
    common(p, field=True)
    p.set_defaults(func=cmd_random_verify)

    p = sub.add_parser("sumset-stats", help="doubling ratios of a set file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_sumset_stats)

    p = sub.add_parser("dilate-example",
                       help="bivariate construction with independent growth knobs")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    common(p)
    p.set_defaults(func=cmd_dilate_example)

    p = sub.add_parser("entropy", help="entropic distance between set files")
    p.add_argument("file")
    p.add_argument("other", nargs="?", default=None)
    common(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("cover", help="greedy covering witness for two set files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    common(p)
    p.set_defaults(func=cmd_cover)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputFormatError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return OVER_LIMIT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

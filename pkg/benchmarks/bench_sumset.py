"""Compare the pure-Python and compiled sumset kernels.

Times pairwise_sum_unique and pairwise_sum_counts on random packed codes,
the quadratic loops that dominate every sumset, doubling-statistic, and
entropy computation.  Run:

    python benchmarks/bench_sumset.py
    python benchmarks/bench_sumset.py --field 3^2 --size 3000 --coeffs 6
"""

import argparse
import random
import time

from fqtlab import Field
from fqtlab.kernels import (HAVE_SPEEDUPS, PackSpec, pairwise_sum_counts,
                            pairwise_sum_unique)


def _random_codes(spec: PackSpec, rng: random.Random, count: int) -> list[int]:
    limit = 1 << spec.bits
    top = min(limit, 1 << 62)
    raw = {rng.randrange(top) for _ in range(count)}
    # mask stray bits so every draw is a valid packed code
    codes = set()
    if spec.p == 2:
        codes = raw
    else:
        dmask = (1 << spec.width) - 1
        for v in raw:
            code = 0
            for k in range(spec.ndigits):
                digit = ((v >> (k * spec.width)) & dmask) % spec.p
                code |= digit << (k * spec.width)
            codes.add(code)
    return sorted(codes)


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--field", default="2^1", help="field spec p^r")
    parser.add_argument("--modulus", default=None)
    parser.add_argument("--size", type=int, default=2000,
                        help="elements per operand set")
    parser.add_argument("--coeffs", type=int, default=12,
                        help="coefficient window (polynomial degree bound)")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    field = Field.from_spec(args.field, args.modulus)
    spec = PackSpec.for_field(field, args.coeffs)
    if spec.bits > 64:
        parser.error(f"{spec.bits}-bit codes exceed the compiled lane; "
                     "reduce --coeffs")
    rng = random.Random(args.seed)
    a = _random_codes(spec, rng, args.size)
    b = _random_codes(spec, rng, args.size)
    pairs = len(a) * len(b)
    print(f"field {field.spec_string}, {len(a)} x {len(b)} codes "
          f"({spec.bits}-bit), {pairs:,} pairs")

    lanes = ["pure"] + (["compiled"] if HAVE_SPEEDUPS else [])
    if not HAVE_SPEEDUPS:
        print("compiled kernel not built; timing the pure lane only")
    baseline = {}
    for op, fn in (("unique", pairwise_sum_unique), ("counts", pairwise_sum_counts)):
        for lane in lanes:
            dt = _time(lambda: fn(a, b, spec, backend=lane), args.repeats)
            rate = pairs / dt / 1e6
            note = ""
            if lane == "pure":
                baseline[op] = dt
            else:
                note = f"  ({baseline[op] / dt:.1f}x vs pure)"
            print(f"  {op:7s} {lane:9s} {dt * 1e3:9.1f} ms "
                  f"{rate:8.1f} Mpairs/s{note}")


if __name__ == "__main__":
    main()

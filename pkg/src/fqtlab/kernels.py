"""Pairwise-sum kernels over packed coefficient codes.

A polynomial over F_q (q = p^r) is packed into a single integer by laying
out its base-p digit vector in fixed-width bit fields: coefficient i
contributes digits i*r .. i*r + r - 1, and digit k occupies bits
[k*width, (k+1)*width).  For p = 2 the width is 1 and adding two packed
codes is plain XOR.  For odd p the width leaves the top bit of every field
spare, so a digit-wise add normalizes branch-free: add the raw codes (no
cross-field carries, each field stays below 2^(width-1)), then subtract p
from every field that reached p, detected via the spare bit.

The same arithmetic runs in three places: scalar helpers here on unbounded
Python ints (no width limit), the pure-Python pairwise loops, and the
compiled extension fqtlab._speedups over uint64 codes.  Results are
identical; the compiled lane is just the hot quadratic loop in C.  Backend
selection: compiled when the extension imported and the code fits in 64
bits, pure otherwise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import ResourceLimitError
from .field import Field

try:
    from . import _speedups
except ImportError:  # pragma: no cover - depends on the build
    _speedups = None

HAVE_SPEEDUPS = _speedups is not None
BACKEND = "compiled" if HAVE_SPEEDUPS else "pure"

_CAP_MSG = "pairwise sum exceeds the configured cap of {} elements"


def _width_for(p: int) -> int:
    # need 2^(width-1) > 2(p-1) so the raw digit sum never reaches the top bit
    return 1 if p == 2 else (2 * (p - 1)).bit_length() + 1


@dataclass(frozen=True)
class PackSpec:
    """Packing layout for one field and a fixed coefficient window."""

    p: int
    r: int
    ncoeffs: int
    width: int
    ones: int    # 1 in the lowest bit of every digit field
    detect: int  # 2^(width-1) - p in every digit field (odd p only)

    @classmethod
    def for_field(cls, field: Field, ncoeffs: int) -> "PackSpec":
        p, r = field.p, field.r
        width = _width_for(p)
        ndigits = r * ncoeffs
        ones = 0
        for k in range(ndigits):
            ones |= 1 << (k * width)
        detect = ones * ((1 << (width - 1)) - p) if p != 2 else 0
        return cls(p, r, ncoeffs, width, ones, detect)

    @property
    def ndigits(self) -> int:
        return self.r * self.ncoeffs

    @property
    def bits(self) -> int:
        return self.width * self.ndigits


def pack_coeffs(spec: PackSpec, coeffs) -> int:
    """Pack element encodings (one per coefficient, low degree first)."""
    code = 0
    if spec.p == 2:
        for i, enc in enumerate(coeffs):
            code |= enc << (i * spec.r)
        return code
    w, p = spec.width, spec.p
    for i, enc in enumerate(coeffs):
        for k in range(spec.r):
            code |= (enc % p) << ((i * spec.r + k) * w)
            enc //= p
    return code


def unpack_coeffs(spec: PackSpec, code: int) -> list[int]:
    """Inverse of pack_coeffs; returns ncoeffs element encodings."""
    if spec.p == 2:
        mask = (1 << spec.r) - 1
        return [(code >> (i * spec.r)) & mask for i in range(spec.ncoeffs)]
    w, p = spec.width, spec.p
    dmask = (1 << w) - 1
    out = []
    for i in range(spec.ncoeffs):
        enc = 0
        for k in reversed(range(spec.r)):
            enc = enc * p + ((code >> ((i * spec.r + k) * w)) & dmask)
        out.append(enc)
    return out


def add_codes(spec: PackSpec, x: int, y: int) -> int:
    if spec.p == 2:
        return x ^ y
    z = x + y
    t = z + spec.detect
    mask = (t >> (spec.width - 1)) & spec.ones
    return z - mask * spec.p


def negate_code(spec: PackSpec, x: int) -> int:
    if spec.p == 2:
        return x
    z = spec.ones * spec.p - x
    t = z + spec.detect
    mask = (t >> (spec.width - 1)) & spec.ones
    return z - mask * spec.p


def _resolve_backend(spec: PackSpec, backend: str | None) -> str:
    if backend is None:
        return "compiled" if HAVE_SPEEDUPS and spec.bits <= 64 else "pure"
    if backend == "compiled":
        if not HAVE_SPEEDUPS:
            raise RuntimeError("compiled kernel is not available")
        if spec.bits > 64:
            raise ValueError(f"codes need {spec.bits} bits; compiled lane is limited to 64")
        return "compiled"
    if backend == "pure":
        return "pure"
    raise ValueError(f"unknown backend {backend!r}")


def _to_u64(codes):
    import numpy as np

    return np.asarray(list(codes), dtype=np.uint64)


def pairwise_sum_unique(acodes, bcodes, spec: PackSpec, cap: int | None = None,
                        backend: str | None = None) -> list[int]:
    """Sorted unique codes {a + b}; raises ResourceLimitError above cap."""
    acodes = list(acodes)
    bcodes = list(bcodes)
    if not acodes or not bcodes:
        return []
    lane = _resolve_backend(spec, backend)
    if lane == "compiled":
        res = _speedups.pairwise_unique(
            _to_u64(acodes), _to_u64(bcodes), spec.p, spec.width, spec.ndigits,
            -1 if cap is None else cap)
        if res is None:
            raise ResourceLimitError(_CAP_MSG.format(cap))
        return [int(v) for v in res]
    out: set[int] = set()
    if spec.p == 2:
        for x in acodes:
            out.update(x ^ y for y in bcodes)
            if cap is not None and len(out) > cap:
                raise ResourceLimitError(_CAP_MSG.format(cap))
    else:
        ones, det, w, p = spec.ones, spec.detect, spec.width, spec.p
        for x in acodes:
            for y in bcodes:
                z = x + y
                t = z + det
                out.add(z - ((t >> (w - 1)) & ones) * p)
            if cap is not None and len(out) > cap:
                raise ResourceLimitError(_CAP_MSG.format(cap))
    return sorted(out)


def pairwise_sum_counts(acodes, bcodes, spec: PackSpec,
                        backend: str | None = None) -> dict[int, int]:
    """Multiplicity of every code a + b over all pairs."""
    acodes = list(acodes)
    bcodes = list(bcodes)
    if not acodes or not bcodes:
        return {}
    lane = _resolve_backend(spec, backend)
    if lane == "compiled":
        keys, counts = _speedups.pairwise_counts(
            _to_u64(acodes), _to_u64(bcodes), spec.p, spec.width, spec.ndigits)
        return {int(k): int(c) for k, c in zip(keys, counts)}
    out: Counter[int] = Counter()
    if spec.p == 2:
        for x in acodes:
            for y in bcodes:
                out[x ^ y] += 1
    else:
        ones, det, w, p = spec.ones, spec.detect, spec.width, spec.p
        for x in acodes:
            for y in bcodes:
                z = x + y
                t = z + det
                out[z - ((t >> (w - 1)) & ones) * p] += 1
    return dict(out)

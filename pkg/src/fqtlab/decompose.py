"""Canonical block decompositions of subspaces of F_q[t].

A block (width, gen) stands for the direct summand Pol(width) * gen, the set
of products a * gen with deg a < width.  decompose() turns a subspace V into
blocks whose direct sum is V and whose count equals weak_dim(V), i.e. the
decomposition is as short as the growth of V under multiplication by t
allows.  The construction processes the echelon basis in increasing degree
and keeps the invariant that the current blocks decompose the space spanned
so far with block count equal to its weak dimension.

When the next basis element x arrives, the space W spanned by the one-step
extensions t^width * gen of the current blocks is intersected with the
enlarged space.  A trivial intersection means the growth dimension went up
and x opens a fresh width-1 block.  Otherwise the intersection is a single
line whose monic generator z = sum alpha_i t^(width_i) gen_i lets one block
with minimal width among the participants absorb the dependency: that block
is replaced by (width+1, y) with y = sum alpha_i t^(width_i - width) gen_i,
which keeps the sum direct and the block count unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ResourceLimitError
from .field import Field
from .poly import Poly
from .progression import Progression, Term
from .spaces import Subspace


class Block(NamedTuple):
    width: int
    gen: Poly


@dataclass(frozen=True)
class StrongDecomposition:
    field: Field
    blocks: tuple[Block, ...]

    @property
    def rank(self) -> int:
        return len(self.blocks)

    def expanded_generators(self) -> list[Poly]:
        """All shifts t^j * gen with j < width, in block order."""
        return [b.gen.shift(j) for b in self.blocks for j in range(b.width)]

    def span(self) -> Subspace:
        return Subspace.span(self.field, self.expanded_generators())

    def to_progression(self, base: Poly | None = None) -> Progression:
        if base is None:
            base = Poly.zero(self.field)
        return Progression(self.field, base,
                           tuple(Term(b.width, b.gen) for b in self.blocks))

    def block_records(self) -> list[dict]:
        return [{"d": b.width, "y": str(b.gen)} for b in self.blocks]


def _staircase_coords(gens: list[Poly], target: Poly) -> list[int]:
    """Coordinates of target over monic gens with strictly increasing degrees."""
    field = target.field
    work = target
    alphas = [0] * len(gens)
    for i in reversed(range(len(gens))):
        d = gens[i].degree
        c = work.coeff(d) if not work.is_zero() and work.degree >= d else 0
        if c:
            alphas[i] = c
            work = work - gens[i].scale(c)
    assert work.is_zero(), "target not in the staircase span"
    return alphas


def decompose(V: Subspace) -> StrongDecomposition:
    field = V.field
    blocks: list[Block] = []
    done: list[Poly] = []
    for x in V.basis:
        done.append(x)
        current = Subspace.span(field, done)
        tops = [b.gen.shift(b.width) for b in blocks]
        W = Subspace.span(field, tops)
        Z = W.intersect(current)
        assert Z.dim <= 1, "growth step produced a fat intersection"
        if Z.dim == 1:
            z = Z.basis[0]
            alphas = _staircase_coords(tops, z)
            live = [i for i, a in enumerate(alphas) if a]
            assert live, "trivial dependency in merge step"
            i_star = min(live, key=lambda i: (blocks[i].width, i))
            w0 = blocks[i_star].width
            y = Poly.zero(field)
            for i in live:
                y = y + blocks[i].gen.shift(blocks[i].width - w0).scale(alphas[i])
            del blocks[i_star]
            blocks.append(Block(w0 + 1, y.monic()))
        else:
            blocks.append(Block(1, x))
        weights = [b.width + b.gen.degree for b in blocks]
        assert all(a < b for a, b in zip(weights, weights[1:])), \
            "block weights lost strict ordering"
        expanded = [b.gen.shift(j) for b in blocks for j in range(b.width)]
        assert Subspace.span(field, expanded) == current and \
            sum(b.width for b in blocks) == current.dim, \
            "blocks stopped decomposing the processed space directly"
    return StrongDecomposition(field, tuple(blocks))


@dataclass(frozen=True)
class DecompositionReport:
    ordering_ok: bool
    direct_ok: bool
    span_ok: bool
    rank: int
    weak_dim: int

    @property
    def all_ok(self) -> bool:
        return self.ordering_ok and self.direct_ok and self.span_ok

    @property
    def minimal(self) -> bool:
        return self.rank == self.weak_dim


def verify_decomposition(V: Subspace, dec: StrongDecomposition) -> DecompositionReport:
    """Independent validity check of a decomposition against a subspace."""
    ordering_ok = dec.field == V.field
    weights = []
    for b in dec.blocks:
        if b.width < 1 or b.gen.is_zero() or b.gen.field != V.field:
            ordering_ok = False
            break
        weights.append(b.width + b.gen.degree)
    else:
        ordering_ok = ordering_ok and all(
            a < b for a, b in zip(weights, weights[1:]))
    expanded = dec.expanded_generators() if ordering_ok else []
    if ordering_ok:
        S = Subspace.span(V.field, expanded)
        direct_ok = S.dim == sum(b.width for b in dec.blocks)
        span_ok = S == V
    else:
        direct_ok = span_ok = False
    return DecompositionReport(
        ordering_ok=ordering_ok,
        direct_ok=direct_ok,
        span_ok=span_ok,
        rank=dec.rank,
        weak_dim=V.weak_dim(),
    )


@dataclass(frozen=True)
class OracleLimits:
    max_points: int = 100_000
    max_nodes: int = 1_000_000


def struct_dim_oracle(V: Subspace, limits: OracleLimits | None = None) -> int:
    """Minimal k with V = Pol(d_1) x_1 + ... + Pol(d_k) x_k, sums not
    necessarily direct, found by exhaustive search.

    Any cover block with d below its maximum legal depth can be widened
    without leaving V, so the search ranges over maximal blocks only.
    """
    limits = limits or OracleLimits()
    if V.dim == 0:
        return 0
    if V.size > limits.max_points:
        raise ResourceLimitError(
            f"oracle needs {V.size} points, above the cap of {limits.max_points}")
    field = V.field
    blocks_by_space: dict[Subspace, None] = {}
    for x in V.enumerate_elements(cap=limits.max_points):
        if x.is_zero() or x.lead() != 1:
            continue
        depth = 1
        while x.shift(depth) in V:
            depth += 1
        B = Subspace.span(field, [x.shift(j) for j in range(depth)])
        blocks_by_space.setdefault(B, None)
    cands = sorted(blocks_by_space,
                   key=lambda B: (-B.dim, [b.encode() for b in B.basis]))
    if len(cands) <= 512:
        kept = []
        for B in cands:
            if not any(other.dim > B.dim and all(b in other for b in B.basis)
                       for other in cands):
                kept.append(B)
        cands = kept
    target = V.dim
    budget = limits.max_nodes
    nodes = 0

    def dfs(start: int, cur: Subspace, remaining: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceLimitError(
                f"oracle search exceeded the node budget of {budget}")
        if cur.dim == target:
            return True
        if remaining == 0:
            return False
        for j in range(start, len(cands)):
            if cur.dim + remaining * cands[j].dim < target:
                break  # candidates are sorted by dim, no later block helps
            nxt = cur + cands[j]
            if nxt.dim == cur.dim:
                continue
            if dfs(j + 1, nxt, remaining - 1):
                return True
        return False

    for k in range(1, target + 1):
        if dfs(0, Subspace.zero(field), k):
            return k
    raise AssertionError("single-element blocks must cover the space")

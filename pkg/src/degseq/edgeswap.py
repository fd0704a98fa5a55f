"""Degree-preserving edge-swap randomizer (the comparison baseline).

A swap draws two distinct edges e1 = (a, b) and e2 = (c, d) uniformly at
random and proposes replacing them with (a, d) and (c, b).  The proposal is
accepted only when all four endpoints are distinct and neither replacement
edge already exists, so every vertex degree and graph simplicity are
invariant.  The second edge's orientation is flipped with probability 1/2 so
both rewirings of a drawn pair are reachable.

The default budget is ceil((m/2) * ln m) accepted swaps, the amount used to
rewire essentially all edges; rejections retry, with an attempt cap of 100x
the budget so rigid graphs (K4 admits no acceptable swap at all) terminate
with partial stats and a flag instead of spinning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import TooFewEdges
from .graph import Graph
from .rng import STREAM_SWAP, stream

__all__ = ["SwapStats", "swap_step", "randomize", "default_swap_budget"]

ATTEMPT_CAP_FACTOR = 100


@dataclass
class SwapStats:
    attempted: int = 0
    accepted: int = 0
    rejected_selfloop: int = 0
    rejected_parallel: int = 0
    rejected_degenerate: int = 0
    capped: bool = False

    def as_dict(self) -> dict[str, int | bool]:
        return {
            "attempted": self.attempted,
            "accepted": self.accepted,
            "rejected_selfloop": self.rejected_selfloop,
            "rejected_parallel": self.rejected_parallel,
            "rejected_degenerate": self.rejected_degenerate,
            "capped": self.capped,
        }


def default_swap_budget(m: int) -> int:
    return math.ceil((m / 2) * math.log(m))


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _attempt(g: Graph, edge_list: list[tuple[int, int]], rng, stats: SwapStats) -> bool:
    m = len(edge_list)
    i = int(rng.integers(m))
    j = int(rng.integers(m))
    while j == i:
        j = int(rng.integers(m))
    a, b = edge_list[i]
    c, d = edge_list[j]
    if rng.integers(2):
        c, d = d, c
    stats.attempted += 1
    if a == d or c == b:
        stats.rejected_selfloop += 1
        return False
    if a == c or b == d:
        stats.rejected_degenerate += 1
        return False
    e3 = _norm(a, d)
    e4 = _norm(c, b)
    if e3 in g.edges or e4 in g.edges:
        stats.rejected_parallel += 1
        return False
    old1 = _norm(a, b)
    old2 = _norm(c, d)
    g.edges.remove(old1)
    g.edges.remove(old2)
    g.edges.add(e3)
    g.edges.add(e4)
    g.adjacency[a].discard(b)
    g.adjacency[b].discard(a)
    g.adjacency[c].discard(d)
    g.adjacency[d].discard(c)
    g.adjacency[a].add(d)
    g.adjacency[d].add(a)
    g.adjacency[c].add(b)
    g.adjacency[b].add(c)
    edge_list[i] = e3
    edge_list[j] = e4
    stats.accepted += 1
    return True


def swap_step(g: Graph, rng, stats: SwapStats | None = None) -> bool:
    """One swap attempt, mutating g only on acceptance; returns acceptance."""
    if g.m < 2:
        raise TooFewEdges(f"need at least 2 edges, have {g.m}")
    if stats is None:
        stats = SwapStats()
    edge_list = sorted(g.edges)
    return _attempt(g, edge_list, rng, stats)


def randomize(
    g: Graph,
    swaps: int | None = None,
    rng=None,
    seed: int | None = None,
) -> tuple[Graph, SwapStats]:
    """Rewire a copy of g with the given number of accepted swaps.

    Pass either an RNG or a seed (which opens the dedicated swap stream).
    """
    if g.m < 2:
        raise TooFewEdges(f"need at least 2 edges, have {g.m}")
    if rng is None:
        rng = stream(0 if seed is None else seed, STREAM_SWAP)
    budget = default_swap_budget(g.m) if swaps is None else int(swaps)
    out = g.copy()
    stats = SwapStats()
    edge_list = sorted(out.edges)
    cap = ATTEMPT_CAP_FACTOR * max(budget, 1)
    while stats.accepted < budget and stats.attempted < cap:
        _attempt(out, edge_list, rng, stats)
    if stats.accepted < budget:
        stats.capped = True
    return out, stats

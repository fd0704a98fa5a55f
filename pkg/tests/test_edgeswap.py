from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from degseq.edgeswap import SwapStats, default_swap_budget, randomize, swap_step
from degseq.errors import TooFewEdges
from degseq.graph import Graph
from degseq.rng import STREAM_SWAP, stream

from conftest import random_graphical_degrees


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


class TestSwapStep:
    def test_disjoint_edges_always_swap(self):
        # two disjoint edges on 4 vertices: any draw proposes a valid swap
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        rng = stream(0, STREAM_SWAP)
        stats = SwapStats()
        accepted = swap_step(g, rng, stats)
        assert accepted
        assert g.degrees().tolist() == [1, 1, 1, 1]
        assert stats.accepted == 1 and stats.attempted == 1

    def test_shared_vertex_rejected(self):
        # triangle plus pendant: force draws until a shared-vertex pair shows up
        g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        before = set(g.edges)
        rng = stream(1, STREAM_SWAP)
        stats = SwapStats()
        for _ in range(50):
            swap_step(g, rng, stats)
        assert stats.rejected_degenerate + stats.rejected_selfloop > 0
        assert stats.attempted == stats.accepted + stats.rejected_selfloop + \
            stats.rejected_parallel + stats.rejected_degenerate
        assert g.degrees().tolist() == [2, 2, 3, 1]
        # rejections leave the graph unchanged; acceptances preserve degrees
        if stats.accepted == 0:
            assert g.edges == before

    def test_k4_rigid(self):
        g = complete_graph(4)
        rng = stream(2, STREAM_SWAP)
        stats = SwapStats()
        for _ in range(200):
            assert not swap_step(g, rng, stats)
        assert stats.accepted == 0
        assert g.edges == complete_graph(4).edges

    def test_k4_distinct_endpoint_proposals_all_parallel(self):
        # exhaustive: every pair of disjoint K4 edges proposes existing edges
        g = complete_graph(4)
        edges = sorted(g.edges)
        for e1, e2 in itertools.combinations(edges, 2):
            a, b = e1
            for c, d in (e2, e2[::-1]):
                if len({a, b, c, d}) == 4:
                    assert g.has_edge(a, d) and g.has_edge(c, b)

    def test_too_few_edges(self):
        g = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(TooFewEdges):
            swap_step(g, stream(0, STREAM_SWAP))


class TestRandomize:
    def test_default_budget_formula(self):
        assert default_swap_budget(100) == math.ceil(50 * math.log(100)) == 231

    def test_degree_invariance_fuzz(self):
        rng = np.random.default_rng(5)
        for trial in range(20):
            n = int(rng.integers(6, 40))
            deg = random_graphical_degrees(rng, n, 0.3)
            edges = set()
            for u in range(n):
                for v in range(u + 1, n):
                    if rng.random() < 0.3:
                        edges.add((u, v))
            g = Graph.from_edges(n, edges)
            if g.m < 2:
                continue
            out, stats = randomize(g, seed=trial)
            assert (out.degrees() == g.degrees()).all()
            assert all(u < v for u, v in out.edges)
            assert len(out.edges) == g.m
            assert stats.attempted == stats.accepted + stats.rejected_selfloop + \
                stats.rejected_parallel + stats.rejected_degenerate
            # adjacency stays symmetric and consistent with the edge set
            rebuilt = Graph.from_edges(n, out.edges)
            assert rebuilt.adjacency == out.adjacency

    def test_k4_capped(self):
        out, stats = randomize(complete_graph(4), seed=0)
        assert out.edges == complete_graph(4).edges
        assert stats.capped
        assert stats.accepted == 0

    def test_explicit_swap_count(self):
        g = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5), (0, 2), (1, 4)])
        out, stats = randomize(g, swaps=3, seed=9)
        assert stats.accepted == 3
        assert (out.degrees() == g.degrees()).all()

    def test_input_not_mutated(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        before = set(g.edges)
        randomize(g, swaps=5, seed=3)
        assert g.edges == before

    def test_rejection_reasons_match_naive_validator(self):
        # classify a stream of proposals two ways and compare counts
        rng = np.random.default_rng(11)
        n = 12
        edges = set()
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.35:
                    edges.add((u, v))
        g = Graph.from_edges(n, edges)
        swap_rng = stream(21, STREAM_SWAP)
        stats = SwapStats()
        for _ in range(400):
            gg = g.copy()
            before = set(gg.edges)
            s = SwapStats()
            accepted = swap_step(gg, swap_rng, s)
            after = set(gg.edges)
            if accepted:
                # naive validation: degrees equal, simple, exactly 2 edges differ
                assert (gg.degrees() == g.degrees()).all()
                assert len(before - after) == 2 and len(after - before) == 2
            else:
                assert after == before
            for key in ("accepted", "rejected_selfloop", "rejected_parallel", "rejected_degenerate"):
                setattr(stats, key, getattr(stats, key) + getattr(s, key))
        assert stats.accepted > 0 and stats.rejected_parallel > 0

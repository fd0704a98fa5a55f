from __future__ import annotations

import itertools

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from degseq.graphicality import (
    PARALLEL_MIN_N,
    check_graphical,
    check_inequalities,
    compute_weights,
    corrected_durfee,
    prefix_sums,
)
from degseq.sequence import DegreeSequence

from oracles import durfee_count, eg_naive, has_realization, havel_hakimi, weight_counts

WORKER_COUNTS = [1, 2, 3, 4, 5, 8]


def sorted_desc(values) -> np.ndarray:
    return np.ascontiguousarray(np.sort(np.asarray(values, dtype=np.int64))[::-1])


degree_arrays = st.lists(st.integers(0, 30), min_size=0, max_size=60).map(
    lambda xs: np.minimum(np.array(xs, dtype=np.int64), max(len(xs) - 1, 0))
)


class TestDurfee:
    def test_paper_figure(self):
        assert corrected_durfee(sorted_desc([3, 2, 2, 2, 1])) == 3

    def test_all_zero(self):
        assert corrected_durfee(sorted_desc([0, 0, 0, 0])) == 1

    def test_full_prefix(self):
        assert corrected_durfee(sorted_desc([4, 4, 4, 4, 4])) == 5

    def test_empty(self):
        assert corrected_durfee(np.array([], dtype=np.int64)) == 0

    @given(degree_arrays)
    @settings(max_examples=150, deadline=None)
    def test_matches_counting_definition(self, arr):
        d = sorted_desc(arr)
        expected = durfee_count(d.tolist())
        for w in WORKER_COUNTS:
            assert corrected_durfee(d, workers=w) == expected


class TestPrefixSums:
    def test_d1(self):
        assert prefix_sums(sorted_desc([3, 3, 2, 2, 2])).tolist() == [0, 3, 6, 8, 10, 12]

    def test_zeros(self):
        assert prefix_sums(np.zeros(3, dtype=np.int64)).tolist() == [0, 0, 0, 0]

    def test_d2(self):
        assert prefix_sums(sorted_desc([4, 3, 2, 1])).tolist() == [0, 4, 7, 9, 10]

    @given(st.lists(st.integers(0, 10**6), min_size=0, max_size=200))
    @settings(max_examples=150, deadline=None)
    def test_parallel_bit_identical(self, xs):
        arr = np.array(xs, dtype=np.int64)
        reference = np.concatenate(([0], np.cumsum(arr)))
        for w in WORKER_COUNTS:
            assert (prefix_sums(arr, workers=w) == reference).all()


class TestWeights:
    def test_fig5_sequence(self):
        w = compute_weights(sorted_desc([3, 2, 2, 2, 1]))
        assert w[1:5].tolist() == [5, 4, 1, 0]

    def test_no_positive_entries(self):
        w = compute_weights(sorted_desc([0, 0]))
        assert w[1] == 0

    def test_d1(self):
        w = compute_weights(sorted_desc([3, 3, 2, 2, 2]))
        assert w[1:5].tolist() == [5, 5, 2, 0]

    @given(degree_arrays)
    @settings(max_examples=150, deadline=None)
    def test_counting_oracle_and_worker_convergence(self, arr):
        d = sorted_desc(arr)
        n = len(d)
        expected = weight_counts(d.tolist())
        for w in WORKER_COUNTS:
            got = compute_weights(d, workers=w)
            assert got[1 : n + 1].tolist() == expected

    def test_adversarial_chunk_boundaries(self):
        # constant runs spanning chunks, all-distinct descents, zero tails,
        # plus a large random case: worker chunking must never change w
        rng = np.random.default_rng(31)
        patterns = [
            np.full(37, 5, dtype=np.int64),
            np.arange(40, dtype=np.int64)[::-1].copy(),
            np.zeros(9, dtype=np.int64),
            np.repeat(np.array([9, 9, 7, 3, 1, 0], dtype=np.int64), 7),
            sorted_desc(rng.integers(0, 11, size=53)),
            sorted_desc(rng.integers(0, 120_000, size=120_000)),
        ]
        for d in patterns:
            d = np.minimum(d, len(d) - 1)
            d = sorted_desc(d)
            reference = compute_weights(d)
            for w in (1, 2, 3, 4, 5, 7, 8, 11, 16):
                assert (compute_weights(d, workers=w) == reference).all(), (len(d), w)


class TestInequalities:
    def test_d1_passes(self):
        d = sorted_desc([3, 3, 2, 2, 2])
        ok, k = check_inequalities(prefix_sums(d), compute_weights(d), corrected_durfee(d))
        assert ok and k is None

    def test_d2_fails_at_one(self):
        d = sorted_desc([4, 3, 2, 1])
        ok, k = check_inequalities(prefix_sums(d), compute_weights(d), corrected_durfee(d))
        assert not ok and k == 1

    def test_single_edge(self):
        d = sorted_desc([1, 1])
        ok, k = check_inequalities(prefix_sums(d), compute_weights(d), corrected_durfee(d))
        assert ok and k is None

    @given(degree_arrays)
    @settings(max_examples=150, deadline=None)
    def test_failing_k_canonical_across_workers(self, arr):
        d = sorted_desc(arr)
        H = prefix_sums(d)
        wts = compute_weights(d)
        c = corrected_durfee(d)
        reference = check_inequalities(H, wts, c)
        for w in WORKER_COUNTS:
            assert check_inequalities(H, wts, c, workers=w) == reference


class TestCheckGraphical:
    def test_paper_d1(self):
        report = check_graphical(DegreeSequence.from_iterable([3, 3, 2, 2, 2]))
        assert report.graphical and report.parity_ok
        assert report.failing_k is None

    def test_parity(self):
        report = check_graphical([1, 0, 0])
        assert not report.graphical and not report.parity_ok

    def test_empty_and_zero(self):
        assert check_graphical([]).graphical
        assert check_graphical([0, 0, 0]).graphical

    def test_graphical_implies_clean_report(self):
        report = check_graphical([2, 2, 2, 2])
        assert report.graphical and report.parity_ok and report.failing_k is None

    def test_small_exhaustive_against_realization_search(self):
        # n <= 5 here; the full n <= 7 sweep runs in the acceptance suite
        for n in range(6):
            cap = max(n - 1, 0)
            for seq in itertools.combinations_with_replacement(range(cap, -1, -1), n):
                got = check_graphical(np.array(seq, dtype=np.int64)).graphical
                assert got == has_realization(seq), seq

    @given(degree_arrays)
    @settings(max_examples=200, deadline=None)
    def test_matches_independent_oracles(self, arr):
        report = check_graphical(arr)
        assert report.graphical == eg_naive(arr.tolist())
        assert report.graphical == havel_hakimi(arr.tolist())
        # report invariants
        if report.graphical:
            assert report.parity_ok and report.failing_k is None
        if report.failing_k is not None:
            assert 1 <= report.failing_k <= report.durfee
            assert report.lhs > report.rhs
        if len(arr):
            assert 1 <= report.durfee <= len(arr)

    @given(degree_arrays)
    @settings(max_examples=100, deadline=None)
    def test_mode_equivalence(self, arr):
        reference = check_graphical(arr, mode="seq")
        for w in WORKER_COUNTS:
            assert check_graphical(arr, mode="par", workers=w) == reference

    @given(degree_arrays)
    @settings(max_examples=150, deadline=None)
    def test_durfee_sufficiency(self, arr):
        # evaluating all n inequalities never changes the first-C verdict
        d = sorted_desc(arr)
        n = len(d)
        report = check_graphical(arr)
        if not report.parity_ok or (n and d[0] >= n):
            return
        H = prefix_sums(d)
        wts = compute_weights(d)
        ok_c, _ = check_inequalities(H, wts, report.durfee)
        ok_n, _ = check_inequalities(H, wts, n)
        assert ok_c == ok_n == report.graphical

    def test_large_parallel_path_matches(self):
        rng = np.random.default_rng(7)
        n = PARALLEL_MIN_N * 3
        arr = rng.integers(0, n // 2, size=n).astype(np.int64)
        reference = check_graphical(arr, mode="seq")
        for w in (2, 4, 8):
            assert check_graphical(arr, mode="par", workers=w) == reference

    def test_oversized_degree_rejected(self):
        report = check_graphical(np.array([6, 0], dtype=np.int64))
        assert not report.graphical
        assert report.failing_k == 1
        assert not has_realization([6, 0])

    def test_more_workers_than_elements(self):
        rng = np.random.default_rng(17)
        for n in range(13):
            arr = np.minimum(rng.integers(0, 8, size=n).astype(np.int64), max(n - 1, 0))
            reference = check_graphical(arr, mode="seq")
            d = sorted_desc(arr)
            for w in (16, 64):
                assert corrected_durfee(d, workers=w) == reference.durfee
                assert (prefix_sums(d, workers=w) == prefix_sums(d)).all()
                assert (compute_weights(d, workers=w) == compute_weights(d)).all()

    def test_scratch_diagnostics(self):
        rng = np.random.default_rng(3)
        n = PARALLEL_MIN_N + 100
        arr = rng.integers(0, 50, size=n).astype(np.int64)
        arr[0] += (arr.sum() % 2)  # force even
        arr = np.minimum(arr, n - 1)
        if arr.sum() % 2:
            arr[0] -= 1
        report, scratch = check_graphical(arr, mode="par", workers=4, return_scratch=True)
        assert scratch is not None
        d = sorted_desc(arr)
        assert (scratch.H == prefix_sums(d)).all()
        assert scratch.durfee == corrected_durfee(d)
        assert scratch.chunk_sums is not None
        assert scratch.chunk_sums.sum() == int(arr.sum())
        assert scratch.chunk_offsets[0] == 0
        # chunk offsets are the exclusive scan of the chunk sums
        assert (scratch.chunk_offsets[1:] == np.cumsum(scratch.chunk_sums)[:-1]).all()

"""Erdős–Gallai graphicality testing.

A sorted sequence d_1 >= ... >= d_n is graphical iff the degree sum is even
and, for each k up to the corrected Durfee number C = |{j : d_j >= j-1}|,

    H_k <= k(k-1) + k(w_k - k) + H_n - H_{w_k}     when k <= w_k,
    H_k <= k(k-1) + H_n - H_k                      otherwise,

where H is the prefix-sum array and w_j counts the entries >= j.  Checking
only the first C inequalities is sufficient.

Both a sequential path and a data-parallel path are provided; they return
identical reports.  The parallel path partitions the Durfee scan and the
inequality scan round-robin, the prefix sums into contiguous chunks with an
exclusive scan over chunk totals, and the weight computation into index
chunks whose rare overlapping writes are merged with store-if-larger
semantics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .runtime import resolve_workers, set_kernel_threads
from .sequence import DegreeSequence

__all__ = [
    "PARALLEL_MIN_N",
    "EgScratch",
    "GraphicalityReport",
    "corrected_durfee",
    "prefix_sums",
    "compute_weights",
    "check_inequalities",
    "check_graphical",
]

# below this size the parallel mode silently runs the sequential path:
# fork/merge overhead dominates and the two paths are equivalent anyway
PARALLEL_MIN_N = 4096


@dataclass(frozen=True)
class GraphicalityReport:
    graphical: bool
    parity_ok: bool
    durfee: int
    failing_k: int | None = None
    lhs: int | None = None
    rhs: int | None = None


@dataclass
class EgScratch:
    """Intermediate arrays of one check, kept for diagnostics and tests."""

    H: np.ndarray
    w: np.ndarray
    durfee: int
    chunk_sums: np.ndarray | None = None
    chunk_offsets: np.ndarray | None = None


def _as_sorted_desc(values) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=np.int64)
    out = np.sort(arr)[::-1]
    return np.ascontiguousarray(out)


def corrected_durfee(sorted_degrees, workers: int | None = None) -> int:
    """|{j in 1..n : d_j >= j-1}| over a non-increasing input."""
    d = np.ascontiguousarray(sorted_degrees, dtype=np.int64)
    w = 1 if workers is None else resolve_workers(workers)
    if w <= 1 or d.shape[0] == 0:
        return int(K.seq_durfee(d))
    set_kernel_threads(w)
    return int(K.par_durfee(d, w))


def prefix_sums(degrees, workers: int | None = None) -> np.ndarray:
    """H with H_0 = 0 and H_i = d_1 + ... + d_i; bit-identical in both modes."""
    d = np.ascontiguousarray(degrees, dtype=np.int64)
    w = 1 if workers is None else resolve_workers(workers)
    if w <= 1 or d.shape[0] == 0:
        return K.seq_prefix(d)
    set_kernel_threads(w)
    return K.par_prefix(d, w)


def compute_weights(sorted_degrees, workers: int | None = None) -> np.ndarray:
    """Weight array with w[j] = number of entries >= j, for j in 1..n.

    Computed descent-by-descent with the sentinel d_0 = n-1, then the tail
    j <= d_n is filled with n.  Index 0 is never written.  The returned array
    has n+2 slots so the inequality check may read w[n].
    """
    d = np.ascontiguousarray(sorted_degrees, dtype=np.int64)
    w = 1 if workers is None else resolve_workers(workers)
    if w <= 1 or d.shape[0] == 0:
        return K.seq_weights(d)
    set_kernel_threads(w)
    return K.par_weights(d, w)


def check_inequalities(
    H: np.ndarray, w: np.ndarray, durfee: int, workers: int | None = None
) -> tuple[bool, int | None]:
    """Evaluate inequalities k = 1..durfee; returns (ok, first failing k).

    The parallel path strides k round-robin under a shared early-exit flag;
    whichever violation is observed first, the result is canonicalized to the
    smallest violated index by a sequential re-scan up to the observed one.
    """
    H = np.ascontiguousarray(H, dtype=np.int64)
    w = np.ascontiguousarray(w, dtype=np.int64)
    c = int(durfee)
    wk = 1 if workers is None else resolve_workers(workers)
    if wk <= 1 or c == 0:
        first = int(K.seq_first_violation(H, w, c))
    else:
        set_kernel_threads(wk)
        observed = int(K.par_observe_violation(H, w, c, wk))
        first = 0 if observed > c else int(K.seq_first_violation(H, w, observed))
    return (first == 0), (first if first else None)


def _inequality_sides(H: np.ndarray, w: np.ndarray, k: int) -> tuple[int, int]:
    n = H.shape[0] - 1
    wk = int(w[k])
    lhs = int(H[k])
    if k <= wk:
        rhs = k * (k - 1) + k * (wk - k) + int(H[n]) - int(H[wk])
    else:
        rhs = k * (k - 1) + int(H[n]) - int(H[k])
    return lhs, rhs


def _oversized_report(arr: np.ndarray, sorted_d: np.ndarray) -> GraphicalityReport:
    # some degree exceeds n-1: inequality k = 1 fails outright
    parity_ok = int(arr.sum()) % 2 == 0
    durfee = int(K.seq_durfee(sorted_d))
    lhs = int(sorted_d[0])
    rhs = int(np.count_nonzero(sorted_d[1:] > 0))
    return GraphicalityReport(False, parity_ok, durfee, failing_k=1, lhs=lhs, rhs=rhs)


def check_graphical(
    seq,
    mode: str = "par",
    workers: int | None = None,
    return_scratch: bool = False,
):
    """Full graphicality check; accepts a DegreeSequence or any integer array.

    Parity is checked first (an odd degree sum is never graphical), then the
    corrected Durfee number, prefix sums, weights, and the inequality scan.
    ``mode="par"`` uses the chunked kernels once n reaches PARALLEL_MIN_N;
    the report is identical either way.  With ``return_scratch`` the result
    is (report, EgScratch or None) where the scratch holds the intermediate
    arrays whenever the full pipeline ran.
    """
    if mode not in ("seq", "par"):
        raise ValueError(f"mode must be 'seq' or 'par', got {mode!r}")
    if isinstance(seq, DegreeSequence):
        arr = seq.as_array()
    else:
        arr = np.ascontiguousarray(seq, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError("degree sequence must be one-dimensional")
    n = arr.shape[0]
    if n == 0:
        report = GraphicalityReport(True, True, 0)
        return (report, None) if return_scratch else report
    if arr.min() < 0:
        raise ValueError("degrees must be non-negative")

    sorted_d = _as_sorted_desc(arr)
    if sorted_d[0] >= n:
        report = _oversized_report(arr, sorted_d)
        return (report, None) if return_scratch else report

    w_count = resolve_workers(workers)
    use_par = mode == "par" and n >= PARALLEL_MIN_N and w_count > 1
    kernel_workers = w_count if use_par else None

    parity_ok = int(arr.sum()) % 2 == 0
    durfee = corrected_durfee(sorted_d, kernel_workers)
    if not parity_ok:
        report = GraphicalityReport(False, False, durfee)
        return (report, None) if return_scratch else report

    H = prefix_sums(sorted_d, kernel_workers)
    weights = compute_weights(sorted_d, kernel_workers)
    ok, failing_k = check_inequalities(H, weights, durfee, kernel_workers)
    if ok:
        report = GraphicalityReport(True, True, durfee)
    else:
        lhs, rhs = _inequality_sides(H, weights, failing_k)
        report = GraphicalityReport(False, True, durfee, failing_k, lhs, rhs)
    if return_scratch:
        scratch = EgScratch(H, weights, durfee)
        if kernel_workers is not None:
            chunk = (n + kernel_workers - 1) // kernel_workers
            bounds = np.arange(0, n, chunk, dtype=np.int64)
            sums = np.add.reduceat(sorted_d, bounds)
            scratch.chunk_sums = sums
            scratch.chunk_offsets = np.concatenate(([0], np.cumsum(sums)[:-1]))
        return report, scratch
    return report

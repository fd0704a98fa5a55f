"""Strong-scaling benchmark harness.

Each target runs at every requested worker count; outputs are verified
identical across counts *before* any timing (a breach aborts the benchmark),
then the median wall time of >= 5 repetitions is reported per count together
with its speedup against the workers=1 row.  Timing wraps the algorithm call
only, never I/O or input preparation: for the graphicality target the input
is sorted once up front, since the pipeline's contract starts from a sorted
sequence.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .errors import EquivalenceBreach
from .generator import generate
from .graphicality import GraphicalityReport, check_inequalities
from .runtime import set_kernel_threads
from .sequence import DegreeSequence

__all__ = ["BenchRow", "BenchReport", "bench", "format_csv"]

MIN_REPS = 5


@dataclass(frozen=True)
class BenchRow:
    workers: int
    median_seconds: float
    speedup: float


@dataclass
class BenchReport:
    target: str
    input_descriptor: str
    reps: int
    rows: list[BenchRow]


def _validate_workers_list(workers_list: list[int]) -> list[int]:
    ws = [int(w) for w in workers_list]
    if not ws or ws[0] != 1 or ws != sorted(ws) or len(set(ws)) != len(ws):
        raise ValueError(
            f"worker list must be strictly ascending and start at 1, got {workers_list}"
        )
    return ws


def _eg_once(sorted_d: np.ndarray, workers: int) -> GraphicalityReport:
    """The full chunked pipeline on a pre-sorted sequence at one worker count."""
    n = sorted_d.shape[0]
    set_kernel_threads(workers)
    durfee = int(K.par_durfee(sorted_d, workers))
    H = K.par_prefix(sorted_d, workers)
    parity_ok = int(H[n]) % 2 == 0
    if not parity_ok:
        return GraphicalityReport(False, False, durfee)
    w = K.par_weights(sorted_d, workers)
    ok, failing_k = check_inequalities(H, w, durfee, workers if workers > 1 else None)
    return GraphicalityReport(ok, True, durfee, failing_k)


def bench(
    target: str,
    seq: DegreeSequence,
    workers_list: list[int],
    reps: int = MIN_REPS,
    seed: int = 0,
) -> BenchReport:
    if target not in ("eg", "gen"):
        raise ValueError(f"target must be 'eg' or 'gen', got {target!r}")
    ws = _validate_workers_list(workers_list)
    if reps < MIN_REPS:
        raise ValueError(f"need at least {MIN_REPS} repetitions, got {reps}")

    if target == "eg":
        sorted_d = np.ascontiguousarray(np.sort(seq.as_array())[::-1])

        def run(w: int):
            return _eg_once(sorted_d, w)

        descriptor = f"eg n={seq.n}"
    else:

        def run(w: int):
            graph, record = generate(seq, seed=seed, mode="par", workers=w)
            return tuple(record.trace)

        descriptor = f"gen n={seq.n} m={seq.edge_count} seed={seed}"

    # equivalence gate: all worker counts must agree before any timing
    reference = run(ws[0])
    for w in ws[1:]:
        out = run(w)
        if out != reference:
            raise EquivalenceBreach(
                f"target {target!r} output changed between workers={ws[0]} and workers={w}"
            )

    rows: list[BenchRow] = []
    base_median = None
    for w in ws:
        times = []
        for _ in range(reps):
            t0 = time.perf_counter()
            run(w)
            t1 = time.perf_counter()
            times.append(t1 - t0)
        med = statistics.median(times)
        if base_median is None:
            base_median = med
            rows.append(BenchRow(w, med, 1.0))
        else:
            rows.append(BenchRow(w, med, base_median / med))
    return BenchReport(target=target, input_descriptor=descriptor, reps=reps, rows=rows)


def format_csv(report: BenchReport, header: bool = False) -> str:
    lines = []
    if header:
        lines.append("workers,median_seconds,speedup")
    for row in report.rows:
        lines.append(f"{row.workers},{row.median_seconds:.6g},{row.speedup:.4g}")
    return "\n".join(lines) + "\n"

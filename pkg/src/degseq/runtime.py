"""Worker-count resolution and kernel thread control.

``workers`` is a logical chunk count: kernels partition work into exactly
that many chunks, so results are reproducible for a given count even when
fewer physical threads exist.  The physical thread team is capped at what
numba was launched with.
"""

from __future__ import annotations

import os

from numba import config as _numba_config
from numba import set_num_threads

DEGSEQ_WORKERS_ENV = "DEGSEQ_WORKERS"

_MAX_THREADS = int(_numba_config.NUMBA_NUM_THREADS)


def default_workers() -> int:
    """DEGSEQ_WORKERS if set, else the machine's available parallelism."""
    env = os.environ.get(DEGSEQ_WORKERS_ENV)
    if env is not None:
        w = int(env)
        if w < 1:
            raise ValueError(f"{DEGSEQ_WORKERS_ENV} must be >= 1, got {w}")
        return w
    return os.cpu_count() or 1


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        return default_workers()
    w = int(workers)
    if w < 1:
        raise ValueError(f"workers must be >= 1, got {w}")
    return w


_current_threads = None


def set_kernel_threads(workers: int) -> None:
    """Bound the physical thread team for the next kernel call."""
    global _current_threads
    target = min(max(1, workers), _MAX_THREADS)
    if target != _current_threads:
        set_num_threads(target)
        _current_threads = target

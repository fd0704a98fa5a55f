"""Seeded RNG streams.

A single 64-bit ``--seed`` determines every random choice a subcommand makes.
The splitting rule: subcommand ``X`` draws from a ``numpy`` PCG64 generator
seeded with ``SeedSequence(entropy=seed, spawn_key=(STREAM_X,))``.  Stream ids
are fixed constants, so runs are reproducible across processes and platforms.

Draw discipline inside the graph generator: exactly one ``Generator.random()``
call per sampled edge, and zero calls for edges assigned through the
all-candidates batch shortcut.
"""

from __future__ import annotations

import numpy as np

STREAM_GENERATE = 1
STREAM_SWAP = 2
STREAM_SYNTH = 3


def stream(seed: int, stream_id: int) -> np.random.Generator:
    """Return the dedicated generator for (seed, stream_id)."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(stream_id),))
    return np.random.Generator(np.random.PCG64(ss))

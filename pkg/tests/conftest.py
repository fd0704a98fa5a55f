from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))


def random_graphical_degrees(rng, n: int, p: float) -> np.ndarray:
    """Degree vector of a G(n, p) draw: graphical by construction."""
    deg = np.zeros(n, dtype=np.int64)
    for u in range(n):
        hits = rng.random(n - u - 1) < p
        deg[u] += int(hits.sum())
        deg[u + 1 :] += hits
    return deg

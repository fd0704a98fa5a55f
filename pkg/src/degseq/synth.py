"""Synthetic degree sequences: power-law samples, regular sequences, and
sequences extracted from an existing edge list.

Random kinds force an even degree sum by decrementing one maximal positive
entry, then reject non-graphical draws; after 100 redraws the parameters are
reported as ungraphable.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import Ungraphable
from .graph import Graph
from .graphicality import check_graphical
from .rng import STREAM_SYNTH, stream
from .sequence import DegreeSequence

__all__ = ["synth_powerlaw", "synth_regular", "synth_from_graph", "synth_sequence"]

MAX_REDRAWS = 100


def _force_even(values: np.ndarray) -> np.ndarray:
    if int(values.sum()) % 2 != 0:
        idx = int(np.argmax(values))
        if values[idx] <= 0:
            raise ValueError("cannot fix parity of an all-zero sequence")
        values = values.copy()
        values[idx] -= 1
    return values


def synth_powerlaw(
    n: int, gamma: float = 2.5, dmax: int | None = None, seed: int = 0
) -> DegreeSequence:
    """n degrees with P(d) proportional to d^-gamma over 1..dmax."""
    if n < 2:
        raise ValueError("powerlaw synthesis needs n >= 2")
    if dmax is None:
        dmax = max(1, math.isqrt(n))
    dmax = min(int(dmax), n - 1)
    if dmax < 1:
        raise ValueError(f"dmax must be >= 1, got {dmax}")
    support = np.arange(1, dmax + 1, dtype=np.float64)
    probs = support**-float(gamma)
    probs /= probs.sum()
    rng = stream(seed, STREAM_SYNTH)
    for _ in range(MAX_REDRAWS):
        values = rng.choice(np.arange(1, dmax + 1, dtype=np.int64), size=n, p=probs)
        values = _force_even(values)
        if check_graphical(values).graphical:
            return DegreeSequence.from_iterable(values)
    raise Ungraphable(f"powerlaw(n={n}, gamma={gamma}, dmax={dmax}, seed={seed})", MAX_REDRAWS)


def synth_regular(n: int, degree: int) -> DegreeSequence:
    """n entries of the given degree, parity-fixed when n*degree is odd."""
    if n < 1:
        raise ValueError("regular synthesis needs n >= 1")
    if degree < 0 or degree > n - 1:
        raise ValueError(f"degree must be in [0, {n - 1}], got {degree}")
    values = np.full(n, degree, dtype=np.int64)
    values = _force_even(values)
    if not check_graphical(values).graphical:
        raise Ungraphable(f"regular(n={n}, degree={degree})", 1)
    return DegreeSequence.from_iterable(values)


def synth_from_graph(g: Graph) -> DegreeSequence:
    """Degree sequence of an existing graph, sorted non-increasing."""
    values = np.sort(g.degrees())[::-1]
    return DegreeSequence.from_iterable(values)


def synth_sequence(kind: str, **kwargs) -> DegreeSequence:
    if kind == "powerlaw":
        return synth_powerlaw(**kwargs)
    if kind == "regular":
        return synth_regular(**kwargs)
    if kind == "from-graph":
        return synth_from_graph(**kwargs)
    raise ValueError(f"unknown synthesis kind {kind!r}")

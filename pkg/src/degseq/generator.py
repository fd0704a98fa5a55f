"""Exact-degree-sequence random graph generation.

The outer loop repeatedly picks the least vertex u of minimal positive
residual degree and assigns all of u's remaining edges before moving on.
For each edge, the candidate set holds every vertex v (not u, not already a
neighbor, residual positive) such that decrementing u and v leaves a
graphical sequence; one candidate is then sampled with probability
proportional to its residual degree.  When u's residual equals the candidate
count, all remaining edges are forced and assigned as one batch (ascending
candidate id, no randomness consumed).

Within one vertex's phase each candidate set is a subset of the previous
one, so the surviving pool is carried between edges instead of being rebuilt.
Candidate admission fans out across workers; sampling and all state
mutations stay single-threaded between fan-outs, which makes the emitted
trace independent of the worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .errors import EmptyCandidates, InternalStuck, NotGraphical, SelfPair, Underflow
from .graph import Graph
from .graphicality import check_graphical
from .rng import STREAM_GENERATE, stream
from .runtime import resolve_workers, set_kernel_threads
from .sequence import DegreeSequence, ResidualState, decrement_pair, min_positive_vertex

__all__ = [
    "CandidateSet",
    "GenRecord",
    "candidate_set",
    "sample_candidate",
    "graphical_after_pair",
    "generate",
    "generate_stepwise",
]


@dataclass(frozen=True, eq=False)
class CandidateSet:
    """Admissible partners for the active vertex, ids strictly ascending."""

    vertices: np.ndarray
    weight_sum: int

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class GenRecord:
    """Audit trail of one generation run."""

    seed: int
    trace: list[tuple[int, int]] = field(default_factory=list)
    log_prob: float = 0.0
    shortcut_batches: int = 0


def _fresh_pool(state: ResidualState, u: int) -> np.ndarray:
    mask = state.residual > 0
    mask[u] = False
    if state.adjacency[u]:
        mask[list(state.adjacency[u])] = False
    return np.flatnonzero(mask).astype(np.int64)


def candidate_set(
    state: ResidualState,
    u: int,
    pool: CandidateSet | None = None,
    workers: int | None = None,
) -> CandidateSet:
    """Admit every potential candidate whose pair decrement stays graphical.

    ``pool=None`` marks the first edge of u's phase: the potential pool is
    every non-neighbor with positive residual.  Otherwise the previous
    candidate set is re-tested (a candidate now was a candidate before, so
    carrying the pool loses nothing and stale entries are purged here).
    """
    if state.residual[u] < 1:
        raise Underflow(u)
    if pool is None:
        fpool = _fresh_pool(state, u)
    else:
        fpool = pool.vertices[state.residual[pool.vertices] > 0]
        fpool = fpool[fpool != u]
    if len(fpool) == 0 or state.residual_total % 2 != 0:
        return CandidateSet(np.empty(0, dtype=np.int64), 0)
    w = resolve_workers(workers)
    set_kernel_threads(w)
    admitted = K.admit_candidates(
        state.view.sorted_vals,
        state.view.block_last,
        state.residual,
        u,
        np.ascontiguousarray(fpool),
        w,
    )
    verts = fpool[admitted.view(bool)]
    return CandidateSet(verts, int(state.residual[verts].sum()))


def sample_candidate(c: CandidateSet, residual: np.ndarray, rng) -> int:
    """Pick v with probability residual[v] / weight_sum, using one draw.

    The ascending candidate list is scanned through its cumulative residual
    weights against a single uniform variate, so identical (candidates,
    residuals, draw) triples always select the same vertex.
    """
    if len(c) == 0:
        raise EmptyCandidates("cannot sample from an empty candidate set")
    cum = np.cumsum(residual[c.vertices])
    r = rng.random() * c.weight_sum
    idx = int(np.searchsorted(cum, r, side="right"))
    return int(c.vertices[idx])


def graphical_after_pair(state: ResidualState, u: int, v: int) -> bool:
    """Would decrementing u and v leave a graphical residual sequence?

    Nothing is mutated: the sorted view is read through a two-point virtual
    decrement (each affected entry logically moves to the end of its value
    block and drops by one), and the full test runs against that overlay.
    """
    if u == v:
        raise SelfPair(u)
    if state.residual[u] < 1:
        raise Underflow(u)
    if state.residual[v] < 1:
        raise Underflow(v)
    view = state.view
    svals = view.sorted_vals
    n = len(svals)
    val_u = int(state.residual[u])
    val_v = int(state.residual[v])
    a = int(view.block_last[val_u])
    b = a - 1 if val_v == val_u else int(view.block_last[val_v])
    lo, hi = (a, b) if a < b else (b, a)

    total = int(state.residual.sum()) - 2
    if total % 2 != 0:
        return False

    H = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(svals, out=H[1:])
    w = K.seq_weights(svals)
    ct = int(K.seq_durfee(svals))
    for p in (lo, hi):
        if p + 1 <= ct and int(svals[p]) - 1 < p:
            ct = p
    hn_t = int(H[n]) - 2
    for k in range(1, ct + 1):
        lhs = int(H[k]) - (lo < k) - (hi < k)
        wk = int(w[k]) - (k == val_u) - (k == val_v)
        if k <= wk:
            hw = int(H[wk]) - (lo < wk) - (hi < wk)
            rhs = k * (k - 1) + k * (wk - k) + hn_t - hw
        else:
            rhs = k * (k - 1) + hn_t - lhs
        if lhs > rhs:
            return False
    return True


def generate(
    seq: DegreeSequence,
    seed: int,
    mode: str = "par",
    workers: int | None = None,
    use_shortcut: bool = True,
) -> tuple[Graph, GenRecord]:
    """Generate a random simple graph realizing ``seq`` exactly.

    For a fixed seed the emitted graph and trace are identical across modes
    and worker counts: admission results are deterministic bitmaps and the
    sampler consumes exactly one uniform per sampled edge (batch-shortcut
    edges consume none).  The run executes inside a compiled engine;
    :func:`generate_stepwise` is the operation-by-operation equivalent the
    engine is tested against.
    """
    if mode not in ("seq", "par"):
        raise ValueError(f"mode must be 'seq' or 'par', got {mode!r}")
    report = check_graphical(seq)
    if not report.graphical:
        raise NotGraphical(f"degree sequence is not graphical: {report}")
    w = 1 if mode == "seq" else resolve_workers(workers)

    record = GenRecord(seed=seed)
    if seq.n == 0:
        return Graph(n=0), record
    rng = stream(seed, STREAM_GENERATE)
    uniforms = rng.random(seq.edge_count)
    set_kernel_threads(w)
    status, eu, ev, log_terms, _, batches = K.generate_engine(
        seq.as_array(), uniforms, w, use_shortcut
    )
    if status != 0:
        raise InternalStuck(
            "empty candidate set mid-run; this cannot happen for a graphical sequence"
        )
    record.trace = [(int(a), int(b)) for a, b in zip(eu, ev)]
    record.log_prob = math.fsum(log_terms.tolist())
    record.shortcut_batches = int(batches)
    return Graph.from_edges(seq.n, record.trace), record


def generate_stepwise(
    seq: DegreeSequence,
    seed: int,
    workers: int | None = None,
    use_shortcut: bool = True,
) -> tuple[Graph, GenRecord]:
    """Reference generation composed from the public operations.

    Draws lazily from the same stream the engine consumes as a block, so for
    any seed both paths emit the identical graph and trace.
    """
    report = check_graphical(seq)
    if not report.graphical:
        raise NotGraphical(f"degree sequence is not graphical: {report}")
    w = 1 if workers is None else resolve_workers(workers)

    state = ResidualState.from_sequence(seq)
    rng = stream(seed, STREAM_GENERATE)
    record = GenRecord(seed=seed)
    log_terms: list[float] = []

    while True:
        u = min_positive_vertex(state)
        if u is None:
            break
        pool: CandidateSet | None = None
        while state.residual[u] > 0:
            cand = candidate_set(state, u, pool, workers=w)
            if len(cand) == 0:
                raise InternalStuck(
                    f"no candidates for vertex {u} with residual "
                    f"{int(state.residual[u])}; this cannot happen for a "
                    "graphical sequence"
                )
            if use_shortcut and int(state.residual[u]) == len(cand):
                for v in cand.vertices:
                    v = int(v)
                    decrement_pair(state, u, v)
                    record.trace.append((u, v) if u < v else (v, u))
                record.shortcut_batches += 1
                break
            v = sample_candidate(cand, state.residual, rng)
            chosen_residual = int(state.residual[v])
            decrement_pair(state, u, v)
            record.trace.append((u, v) if u < v else (v, u))
            log_terms.append(math.log(chosen_residual / cand.weight_sum))
            keep = cand.vertices[cand.vertices != v]
            pool = CandidateSet(keep, cand.weight_sum - chosen_residual)

    record.log_prob = math.fsum(log_terms)
    g = Graph(n=seq.n, edges=set(record.trace), adjacency=state.adjacency)
    return g, record

"""Structural-property suite: triangles, maximal cliques, components, path
statistics, centralities, and local clustering with its distribution.

Path and closeness statistics average over reachable (ordered) vertex pairs
only, and the diameter is the maximum finite eccentricity, so disconnected
graphs are handled without infinities.  Per-vertex betweenness is the
standard dependency accumulation halved (each unordered pair counted once)
and normalized by (n-1)(n-2); local clustering of a vertex with fewer than
two neighbors is 0.

All sweeps are pure functions of the immutable graph; the per-source BFS
family fans out across a worker team with per-worker accumulators merged
once at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .errors import NoEdges, TooLarge
from .graph import Graph
from .runtime import resolve_workers, set_kernel_threads

__all__ = [
    "MetricsReport",
    "triangles",
    "per_vertex_triangles",
    "components",
    "path_stats",
    "clustering",
    "centralities",
    "maximal_cliques",
    "compute_metrics",
]

HISTOGRAM_BINS = 100
CLIQUE_SIZE_GUARD = 10**5


@dataclass
class MetricsReport:
    triangles: int
    maximal_cliques: int | None
    components: int
    avg_shortest_path: float | None
    diameter: int | None
    avg_betweenness: float
    avg_closeness: float
    avg_clustering: float
    clustering_histogram: np.ndarray


def _csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    return g.to_csr()


def per_vertex_triangles(g: Graph, workers: int | None = None) -> np.ndarray:
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    indptr, indices = _csr(g)
    w = resolve_workers(workers) if workers is not None else 1
    set_kernel_threads(w)
    return K.triangle_counts(indptr, indices, w)


def triangles(g: Graph, workers: int | None = None) -> int:
    """Number of unordered vertex triples forming 3-cycles."""
    return int(per_vertex_triangles(g, workers).sum()) // 3


def components(g: Graph) -> tuple[int, list[int]]:
    """Connected components; sizes sorted descending."""
    seen = [False] * g.n
    sizes: list[int] = []
    for s in range(g.n):
        if seen[s]:
            continue
        size = 0
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            size += 1
            for t in g.adjacency[v]:
                if not seen[t]:
                    seen[t] = True
                    stack.append(t)
        sizes.append(size)
    sizes.sort(reverse=True)
    return len(sizes), sizes


def path_stats(g: Graph, workers: int | None = None) -> tuple[float, int]:
    """(average shortest path over reachable ordered pairs, diameter)."""
    if g.m == 0:
        raise NoEdges("path statistics are undefined without edges")
    indptr, indices = _csr(g)
    w = resolve_workers(workers) if workers is not None else 1
    set_kernel_threads(w)
    pairs, dist_sum, diameter, _ = K.bfs_path_stats(indptr, indices, w)
    return dist_sum / pairs, int(diameter)


def clustering(g: Graph, workers: int | None = None) -> tuple[float, np.ndarray]:
    """(average local clustering over all n vertices, 100-bin histogram)."""
    deg = g.degrees().astype(np.float64)
    tri = per_vertex_triangles(g, workers).astype(np.float64)
    coeff = np.zeros(g.n, dtype=np.float64)
    mask = deg >= 2
    coeff[mask] = 2.0 * tri[mask] / (deg[mask] * (deg[mask] - 1.0))
    hist, _ = np.histogram(coeff, bins=HISTOGRAM_BINS, range=(0.0, 1.0))
    avg = float(coeff.mean()) if g.n else 0.0
    return avg, hist.astype(np.int64)


def centralities(g: Graph, workers: int | None = None) -> tuple[float, float]:
    """(average betweenness, average closeness) over all n vertices."""
    n = g.n
    if n == 0:
        return 0.0, 0.0
    indptr, indices = _csr(g)
    w = resolve_workers(workers) if workers is not None else 1
    set_kernel_threads(w)
    _, _, _, closeness = K.bfs_path_stats(indptr, indices, w)
    if n < 3:
        return 0.0, float(closeness.mean())
    raw = K.brandes_betweenness(indptr, indices, w)
    bc = (raw / 2.0) / ((n - 1) * (n - 2))
    return float(bc.mean()), float(closeness.mean())


def _bron_kerbosch_count(adj: list[set[int]]) -> int:
    """Count maximal cliques with pivoting (iterative on explicit stack)."""
    count = 0
    n = len(adj)
    all_v = set(range(n))
    stack: list[tuple[set[int], set[int], set[int]]] = [(set(), set(all_v), set())]
    while stack:
        r, p, x = stack.pop()
        if not p and not x:
            if r:
                count += 1
            continue
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            stack.append((r | {v}, p & adj[v], x & adj[v]))
            p.remove(v)
            x.add(v)
    return count


def maximal_cliques(g: Graph, override: bool = False) -> int:
    """Number of maximal cliques; refuses huge inputs unless overridden."""
    if g.n > CLIQUE_SIZE_GUARD and not override:
        raise TooLarge(
            f"maximal-clique enumeration refused for n = {g.n} > {CLIQUE_SIZE_GUARD}; "
            "pass override to force"
        )
    return _bron_kerbosch_count(g.adjacency)


def compute_metrics(
    g: Graph, skip: tuple[str, ...] = (), workers: int | None = None
) -> MetricsReport:
    tri = triangles(g, workers)
    cliques = None if "cliques" in skip else maximal_cliques(g)
    n_comp, _ = components(g)
    try:
        avg_path, diameter = path_stats(g, workers)
    except NoEdges:
        avg_path, diameter = None, None
    avg_bc, avg_cc = centralities(g, workers)
    avg_clust, hist = clustering(g, workers)
    return MetricsReport(
        triangles=tri,
        maximal_cliques=cliques,
        components=n_comp,
        avg_shortest_path=avg_path,
        diameter=diameter,
        avg_betweenness=avg_bc,
        avg_closeness=avg_cc,
        avg_clustering=avg_clust,
        clustering_histogram=hist,
    )

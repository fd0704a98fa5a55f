"""Simple undirected graph container and the edge-list file format.

Edge files are ASCII, one ``u v`` pair per line, 0-based ids with u < v,
``#`` starting a comment.  The vertex count of a parsed file is
max id + 1, so isolated vertices beyond the largest id are not
representable in this format (convert 1-based external data by shifting
ids down by one).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MalformedToken

__all__ = ["Graph", "parse_edges", "format_edges"]


@dataclass
class Graph:
    """Normalized edge set plus adjacency, no self-loops or parallel edges."""

    n: int
    edges: set[tuple[int, int]] = field(default_factory=set)
    adjacency: list[set[int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.adjacency:
            self.adjacency = [set() for _ in range(self.n)]

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        g = cls(n=n)
        for u, v in pairs:
            g.add_edge(int(u), int(v))
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u}, {v}) out of range for n = {self.n}")
        e = (u, v) if u < v else (v, u)
        if e in self.edges:
            raise ValueError(f"duplicate edge {e}")
        self.edges.add(e)
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self.edges

    def degrees(self) -> np.ndarray:
        return np.asarray([len(a) for a in self.adjacency], dtype=np.int64)

    def copy(self) -> "Graph":
        return Graph(
            n=self.n,
            edges=set(self.edges),
            adjacency=[set(a) for a in self.adjacency],
        )

    def to_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR adjacency with ascending neighbor lists."""
        deg = self.degrees()
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.empty(int(indptr[-1]), dtype=np.int64)
        for v in range(self.n):
            nb = sorted(self.adjacency[v])
            indices[indptr[v] : indptr[v + 1]] = nb
        return indptr, indices


def parse_edges(text: str | bytes) -> list[tuple[int, int]]:
    """Parse an edge file into a list of pairs, in file order."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    pairs: list[tuple[int, int]] = []
    pos = 0
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        toks = body.split()
        if not toks:
            continue
        if len(toks) != 2:
            raise MalformedToken(pos, body.strip())
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise MalformedToken(pos, body.strip()) from None
        if u < 0 or v < 0:
            raise MalformedToken(pos, body.strip())
        pairs.append((u, v))
        pos += 1
    return pairs


def graph_from_edge_text(text: str | bytes, n: int | None = None) -> Graph:
    pairs = parse_edges(text)
    if n is None:
        n = 1 + max((max(u, v) for u, v in pairs), default=-1)
    return Graph.from_edges(n, pairs)


def format_edges(pairs) -> str:
    """One normalized ``u v`` line per pair, preserving pair order."""
    lines = []
    for u, v in pairs:
        a, b = (u, v) if u < v else (v, u)
        lines.append(f"{a} {b}")
    return "\n".join(lines) + ("\n" if lines else "")

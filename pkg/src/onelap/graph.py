"""Finite simple undirected graphs with 1-based vertex labels.

Vertices are the integers ``1..n``.  Subsets of vertices are plain Python
sets/frozensets; metric helpers (``boundary_size``, ``subset_volume``) take any
iterable of vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Raised when edge-list text cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        canon = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {e} has a vertex outside 1..{self.n}")
            canon.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, name: str | None = None) -> "Graph":
        edges = list(edges)
        seen = set()
        for i, j in edges:
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(edges), name)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def degrees(self) -> tuple:
        """Degrees in vertex order; ``degrees[i - 1]`` is the degree of ``i``."""
        return tuple(len(self.adjacency[v]) for v in self.vertices)

    def degree(self, v: int) -> int:
        return self.degrees[v - 1]

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    @cached_property
    def volume(self) -> int:
        return 2 * len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    @cached_property
    def is_connected(self) -> bool:
        return len(connected_components(self, self.vertices)) == 1

    def require_connected(self) -> None:
        if not self.is_connected:
            raise DisconnectedGraphError("graph is not connected")

    def relabel(self, mapping: dict) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``mapping[v]``."""
        if sorted(mapping[v] for v in self.vertices) != list(self.vertices):
            raise ValueError("mapping must be a permutation of 1..n")
        return Graph(self.n, frozenset((mapping[i], mapping[j]) for i, j in self.edges))

    def induced(self, subset: Iterable) -> tuple["Graph", dict]:
        """Induced subgraph on ``subset`` relabelled to 1..k, plus old->new map."""
        members = sorted(set(subset))
        index = {v: k + 1 for k, v in enumerate(members)}
        edges = [(index[i], index[j]) for i, j in self.edges if i in index and j in index]
        return Graph(len(members), frozenset(edges)), index

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{i} {j}" for i, j in self.sorted_edges]
        return "\n".join(lines) + "\n"

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} |E|={len(self.edges)}>"


def load_graph(source: str) -> Graph:
    """Parse the edge-list text format.

    Blank lines and lines starting with ``#`` are ignored.  The first data line
    holds ``n``; every further data line holds one edge ``u v``.
    """
    n = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise GraphFormatError("expected the vertex count n", lineno)
            try:
                n = int(parts[0])
            except ValueError:
                raise GraphFormatError(f"invalid vertex count {parts[0]!r}", lineno) from None
            if n < 1:
                raise GraphFormatError("vertex count must be positive", lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        for w in (u, v):
            if not 1 <= w <= n:
                raise GraphFormatError(f"vertex {w} out of range 1..{n}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    if n is None:
        raise GraphFormatError("empty input: missing vertex count")
    return Graph(n, frozenset(edges))


# -- generators --------------------------------------------------------------

_NAMED = {
    # six-vertex graph with nine distinct eigenvalues
    "G6": (6, [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (3, 4), (5, 6)]),
    # triangle - K4 - triangle chain, Cheeger constant 1/7
    "EX_10G": (10, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4), (3, 6),
                    (5, 7), (5, 8), (7, 8), (6, 9), (6, 10), (9, 10)]),
    # triangle with two pendant vertices on one corner
    "EX_5G": (5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5)]),
    # spider used for optimal Cheeger cuts
    "EX_7G": (7, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (3, 7)]),
    # three triangles hung on a central triangle of null vertices
    "EX_9G": (9, [(1, 2), (2, 3), (1, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9),
                  (4, 5), (6, 7), (8, 9)]),
    # two triangles sharing vertex 5
    "EX_5ORDER": (5, [(1, 2), (1, 5), (2, 5), (3, 5), (4, 5), (3, 4)]),
}

NAMED_GRAPHS = tuple(_NAMED)
FAMILIES = ("path", "cycle", "complete", "named")


def path_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("path graphs need n >= 2")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)), f"P{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle graphs need n >= 3")
    edges = {(i, i + 1) for i in range(1, n)} | {(1, n)}
    return Graph(n, frozenset(edges), f"C{n}")


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("complete graphs need n >= 2")
    edges = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return Graph(n, frozenset(edges), f"K{n}")


def named_graph(name: str) -> Graph:
    try:
        n, edges = _NAMED[name]
    except KeyError:
        raise ValueError(f"unknown graph name {name!r}; choose from {', '.join(_NAMED)}") from None
    return Graph(n, frozenset(edges), name)


def generate(family: str, parameter) -> Graph:
    """Build ``path``/``cycle``/``complete`` graphs of order ``parameter`` or a named graph."""
    if family == "path":
        return path_graph(int(parameter))
    if family == "cycle":
        return cycle_graph(int(parameter))
    if family == "complete":
        return complete_graph(int(parameter))
    if family == "named":
        return named_graph(str(parameter))
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


# -- subset metrics ----------------------------------------------------------

def _as_subset(G: Graph, S: Iterable) -> frozenset:
    S = frozenset(S)
    for v in S:
        if not 1 <= v <= G.n:
            raise ValueError(f"vertex {v} not in graph")
    return S


def boundary_size(G: Graph, S: Iterable) -> int:
    """Number of edges with exactly one endpoint in ``S``."""
    S = _as_subset(G, S)
    if not S or len(S) == G.n:
        raise ValueError("boundary_size needs a nonempty proper subset")
    return sum((i in S) != (j in S) for i, j in G.edges)


def edge_boundary(G: Graph, S: Iterable) -> int:
    """Like ``boundary_size`` but defined (as 0) for the empty and full sets."""
    S = frozenset(S)
    return sum((i in S) != (j in S) for i, j in G.edges)


def subset_volume(G: Graph, S: Iterable) -> int:
    S = _as_subset(G, S)
    return sum(G.degrees[v - 1] for v in S)


def connected_components(G: Graph, S: Iterable) -> list:
    """Connected pieces of the subgraph induced on ``S``, sorted by smallest member."""
    remaining = set(S)
    pieces = []
    while remaining:
        start = min(remaining)
        remaining.discard(start)
        piece = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in G.adjacency[v]:
                if w in remaining:
                    remaining.discard(w)
                    piece.add(w)
                    stack.append(w)
        pieces.append(tuple(sorted(piece)))
    pieces.sort()
    return pieces


def is_connected_subset(G: Graph, S: Iterable) -> bool:
    S = set(S)
    return bool(S) and len(connected_components(G, S)) == 1


def enumerate_connected_subsets(G: Graph, vol_cap=None) -> Iterator[frozenset]:
    """Yield every nonempty connected vertex set with volume at most ``vol_cap``.

    Sets are grown from their smallest vertex, only ever adding larger
    vertices from the exclusive neighbourhood, so each set is produced once.
    Output order is by size, then lexicographic on the sorted members.
    """
    if vol_cap is None:
        vol_cap = G.volume
    vol_cap = Fraction(vol_cap)
    if vol_cap <= 0:
        raise ValueError("vol_cap must be positive")
    deg = G.degrees
    adj = G.adjacency
    found = []

    def extend(sub, vol, ext, nbhd, anchor):
        found.append(sub)
        ext = sorted(ext)
        while ext:
            w = ext.pop()
            if vol + deg[w - 1] > vol_cap:
                continue
            fresh = {u for u in adj[w] if u > anchor and u not in nbhd}
            extend(sub | {w}, vol + deg[w - 1], ext + sorted(fresh), nbhd | fresh, anchor)

    for v in G.vertices:
        if deg[v - 1] > vol_cap:
            continue
        nbhd = {u for u in adj[v] if u > v}
        extend(frozenset((v,)), deg[v - 1], nbhd, nbhd | {v}, v)

    found.sort(key=lambda s: (len(s), sorted(s)))
    yield from found


def psi(G: Graph, S: Iterable) -> Fraction:
    """Boundary-to-volume ratio |dS| / vol(S)."""
    S = _as_subset(G, S)
    vol = subset_volume(G, S)
    if vol == 0:
        raise ValueError("psi needs a subset of positive volume")
    return Fraction(edge_boundary(G, S), vol)

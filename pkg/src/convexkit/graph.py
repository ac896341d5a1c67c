"""Immutable simple graphs over vertices ``0..n-1`` with bitmask adjacency.

A vertex set is a plain ``int`` bitmask: bit ``v`` set means ``v`` is a member.
The helpers :func:`vertex_set` and :func:`members` convert to and from
iterables at API boundaries.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

VertexSet = int

INF = math.inf


class GraphFormatError(ValueError):
    """Raised when a graph file or edge list is malformed."""


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Ascending list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitmask of ``v``.

    Instances are immutable and hashable, so they can key caches.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 1:
            raise GraphFormatError("a graph needs at least one vertex")
        if len(adj) != n:
            raise GraphFormatError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphFormatError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphFormatError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise GraphFormatError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", hash((n, adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting loops, out-of-range ends and repeated edges."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_networkx(cls, nxg) -> "Graph":
        nodes = sorted(nxg.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in nxg.edges()))

    @classmethod
    def from_code(cls, n: int, code: int) -> "Graph":
        """Graph whose edge set is read off the bits of ``code``.

        Pairs ``(u, v)`` with ``u < v`` are numbered in lexicographic order;
        ``code`` ranges over ``0 .. 2**(n*(n-1)//2) - 1``.
        """
        adj = [0] * n
        bit = 0
        for u in range(n):
            for v in range(u + 1, n):
                if code >> bit & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                bit += 1
        return cls(n, adj)

    def to_networkx(self):
        import networkx as nx

        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges())
        return nxg

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def closed(self, v: int) -> VertexSet:
        return self.adj[v] | 1 << v

    def induced(self, s: VertexSet) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``s`` relabeled densely, plus the old labels."""
        labels = members(s)
        index = {v: i for i, v in enumerate(labels)}
        adj = [vertex_set(index[u] for u in iter_bits(self.adj[v] & s)) for v in labels]
        return Graph(len(labels), adj), labels

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Bipartition:
    x: VertexSet
    y: VertexSet


def open_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """N(S): vertices with at least one neighbor in ``s``."""
    out = 0
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    return open_neighborhood(g, s) | s


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, (full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def bfs_distances(g: Graph, source: int, within: VertexSet | None = None) -> list[float]:
    if within is None:
        within = g.full
    dist = [INF] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = open_neighborhood(g, frontier) & within & ~seen
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def diameter(g: Graph) -> float:
    """Largest distance, or ``math.inf`` when ``g`` is disconnected."""
    return max(max(row) for row in distance_matrix(g))


def component_of(g: Graph, v: int, within: VertexSet | None = None) -> VertexSet:
    if within is None:
        within = g.full
    seen = frontier = 1 << v
    adj = g.adj
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Components of the subgraph induced by ``within``, ordered by lowest vertex."""
    if within is None:
        within = g.full
    comps = []
    rest = within
    while rest:
        comp = component_of(g, lowest(rest), within)
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph, within: VertexSet | None = None) -> bool:
    if within is None:
        within = g.full
    if not within:
        return True
    return component_of(g, lowest(within), within) == within


def bipartition(g: Graph) -> Bipartition | None:
    """2-coloring by BFS; each component's lowest vertex goes to ``x``."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    x = vertex_set(v for v in range(g.n) if color[v] == 0)
    return Bipartition(x, g.full & ~x)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_clique(g: Graph, s: VertexSet) -> bool:
    return all(s & ~g.adj[v] == 1 << v for v in iter_bits(s))


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not g.adj[v] & s for v in iter_bits(s))


def is_co_bipartite(g: Graph) -> bool:
    return bipartition(complement(g)) is not None


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` edge lines format; ``#`` starts a comment line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    try:
        n, m = (int(tok) for tok in _two_fields(lines[0]))
    except ValueError as exc:
        raise GraphFormatError(f"bad header line {lines[0]!r}") from exc
    if m < 0:
        raise GraphFormatError("negative edge count")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)} edge lines")
    edges = []
    for ln in body:
        try:
            u, v = (int(tok) for tok in _two_fields(ln))
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _two_fields(line: str) -> list[str]:
    fields = line.split()
    if len(fields) != 2:
        raise ValueError(line)
    return fields


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    edges = g.edges()
    out.append(f"{g.n} {len(edges)}")
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# Small named graphs used throughout tests and docs.

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)

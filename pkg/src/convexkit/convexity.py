"""Interval operators, convexity tests and hulls for the four convexities.

``p3`` is generated by paths on three vertices (a vertex outside the set with
two neighbors inside is forced in), ``p3star`` by induced ones (the two
neighbors must be nonadjacent), ``monophonic`` by all induced paths, and
``digital`` by the closed-neighborhood rule ``N[v] <= N[S] => v in S``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    component_of,
    connected_components,
    is_clique,
    iter_bits,
    members,
    open_neighborhood,
)

# Above this size the per-pair induced-path table gets too large to tabulate.
_TABLE_MAX_N = 16


class ConvexityKind(str, enum.Enum):
    DIGITAL = "digital"
    P3 = "p3"
    P3STAR = "p3star"
    MONOPHONIC = "monophonic"

    def __str__(self):
        return self.value


class Mode(str, enum.Enum):
    COVER = "cover"
    PARTITION = "partition"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConvexFamily:
    """A convex cover or partition certificate: ``classes`` are vertex bitmasks of ``graph``."""

    kind: ConvexityKind
    mode: Mode
    classes: tuple[VertexSet, ...]
    graph: Graph

    def __post_init__(self):
        object.__setattr__(self, "kind", ConvexityKind(self.kind))
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "classes", tuple(self.classes))

    def as_lists(self) -> list[list[int]]:
        return [members(c) for c in self.classes]

    def __len__(self):
        return len(self.classes)


def _p3_step(g: Graph, s: VertexSet) -> VertexSet:
    out = s
    for w in iter_bits(g.full & ~s):
        nb = g.adj[w] & s
        if nb & (nb - 1):
            out |= 1 << w
    return out


def _p3star_step(g: Graph, s: VertexSet) -> VertexSet:
    out = s
    for w in iter_bits(g.full & ~s):
        nb = g.adj[w] & s
        for a in iter_bits(nb):
            if nb & ~g.adj[a] & ~(1 << a):
                out |= 1 << w
                break
    return out


def _digital_step(g: Graph, s: VertexSet) -> VertexSet:
    ns = closed_neighborhood(g, s)
    out = 0
    for v in range(g.n):
        if not g.closed(v) & ~ns:
            out |= 1 << v
    # s itself always qualifies: N[v] <= N[S] for v in S
    return out


@lru_cache(maxsize=4096)
def induced_path_table(g: Graph) -> tuple[tuple[VertexSet, ...], ...]:
    """``table[u][v]`` is the set of vertices on some induced ``u``-``v`` path.

    Built by enumerating every induced path from each start vertex, so it is
    exponential in the worst case; meant for small graphs only.
    """
    n = g.n
    adj = g.adj
    table = [[0] * n for _ in range(n)]
    for u in range(n):
        row = table[u]
        row[u] = 1 << u
        # stack of (last vertex, path mask, forbidden mask)
        stack = [(u, 1 << u, 1 << u)]
        while stack:
            last, path, forbidden = stack.pop()
            grown = forbidden | adj[last] | 1 << last
            for x in iter_bits(adj[last] & ~forbidden):
                p = path | 1 << x
                row[x] |= p
                stack.append((x, p, grown))
    return tuple(tuple(r) for r in table)


def on_induced_path(g: Graph, u: int, v: int, w: int) -> bool:
    """Does some induced ``u``-``v`` path pass through ``w``?

    Depth-first search over induced extensions of a path grown from ``u``.
    A branch is cut when ``v`` (or a not-yet-visited ``w``) is no longer
    reachable through admissible vertices, and dead states are memoized.
    """
    if len({u, v, w}) < 3:
        raise ValueError("u, v, w must be distinct")
    adj = g.adj
    vbit, wbit = 1 << v, 1 << w
    dead: set[tuple[int, int, bool]] = set()

    def search(last: int, forbidden: VertexSet, seen_w: bool) -> bool:
        if adj[last] & vbit:
            # any other extension would make v adjacent to an inner vertex
            return seen_w
        key = (last, forbidden, seen_w)
        if key in dead:
            return False
        grown = forbidden | adj[last] | 1 << last
        for x in iter_bits(adj[last] & ~forbidden):
            hit = seen_w or x == w
            if not hit and grown & wbit:
                continue
            free = ~grown | 1 << x
            reach = component_of(g, x, free & g.full)
            if not reach & vbit or (not hit and not reach & wbit):
                continue
            if search(x, grown, hit):
                return True
        dead.add(key)
        return False

    return search(u, 1 << u, False)


def _monophonic_step(g: Graph, s: VertexSet) -> VertexSet:
    verts = members(s)
    out = s
    if g.n <= _TABLE_MAX_N:
        table = induced_path_table(g)
        for i, a in enumerate(verts):
            row = table[a]
            for b in verts[i + 1:]:
                out |= row[b]
        return out
    for w in iter_bits(g.full & ~s):
        if any(
            on_induced_path(g, a, b, w)
            for i, a in enumerate(verts)
            for b in verts[i + 1:]
            if not g.has_edge(a, b)
        ):
            out |= 1 << w
    return out


_STEPS = {
    ConvexityKind.DIGITAL: _digital_step,
    ConvexityKind.P3: _p3_step,
    ConvexityKind.P3STAR: _p3star_step,
    ConvexityKind.MONOPHONIC: _monophonic_step,
}


def interval(g: Graph, kind: ConvexityKind | str, s: VertexSet) -> VertexSet:
    """``s`` plus every vertex forced in by one application of the rule for ``kind``."""
    return _STEPS[ConvexityKind(kind)](g, s)


def is_monophonic_convex(g: Graph, s: VertexSet) -> bool:
    """Component test: every component of ``G - s`` sees only a clique of ``s``.

    Equivalent to closure under induced paths: a component with two
    nonadjacent attachments carries an induced path leaving ``s``, and any
    induced path leaving ``s`` exits and re-enters through such a component.
    """
    for comp in connected_components(g, g.full & ~s):
        if not is_clique(g, open_neighborhood(g, comp) & s):
            return False
    return True


def is_convex(g: Graph, kind: ConvexityKind | str, s: VertexSet) -> bool:
    kind = ConvexityKind(kind)
    if kind is ConvexityKind.MONOPHONIC:
        return is_monophonic_convex(g, s)
    return _STEPS[kind](g, s) == s


def hull(g: Graph, kind: ConvexityKind | str, s: VertexSet) -> VertexSet:
    """Least convex superset of ``s``: iterate the interval to a fixpoint."""
    step = _STEPS[ConvexityKind(kind)]
    while True:
        t = step(g, s)
        if t == s:
            return s
        s = t


def validate_family(fam: ConvexFamily, p: int | None = None) -> tuple[bool, str | None]:
    """Check every certificate condition; returns ``(ok, first failure)``.

    Cover mode allows at most ``p`` classes, partition mode wants exactly ``p``.
    """
    g = fam.graph
    full = g.full
    seen = set()
    union = 0
    for i, c in enumerate(fam.classes):
        if c & ~full:
            return False, f"class {i} has vertices outside the graph"
        if not c:
            return False, f"class {i} is empty"
        if c == full:
            return False, f"class {i} is the whole vertex set"
        if c in seen:
            return False, f"class {i} repeats an earlier class"
        seen.add(c)
        if fam.mode is Mode.PARTITION and union & c:
            return False, f"class {i} overlaps an earlier class"
        union |= c
    if union != full:
        return False, f"classes miss vertices {members(full & ~union)}"
    if p is not None:
        if fam.mode is Mode.PARTITION and len(fam.classes) != p:
            return False, f"partition has {len(fam.classes)} classes, expected {p}"
        if fam.mode is Mode.COVER and len(fam.classes) > p:
            return False, f"cover has {len(fam.classes)} classes, more than {p}"
    for i, c in enumerate(fam.classes):
        if not is_convex(g, fam.kind, c):
            return False, f"class {i} {members(c)} is not {fam.kind}-convex"
    return True, None

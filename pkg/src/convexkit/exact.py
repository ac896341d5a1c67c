"""Brute-force convex p-partition and p-cover search.

These are the ground-truth oracles the specialized algorithms are checked
against, so they rely only on the convexity kernel.
"""

from __future__ import annotations

from .convexity import ConvexFamily, ConvexityKind, Mode, hull
from .graph import Graph, VertexSet, iter_bits, lowest, popcount
from .limits import check_size

DEFAULT_CAP = 20
DEFAULT_CAP_MONOPHONIC = 16


def _check(g: Graph, kind: ConvexityKind, what: str) -> None:
    default = DEFAULT_CAP_MONOPHONIC if kind is ConvexityKind.MONOPHONIC else DEFAULT_CAP
    check_size(g.n, default, what)


def exact_partition(g: Graph, kind: ConvexityKind | str, p: int) -> ConvexFamily | None:
    """Partition into exactly ``p`` nonempty proper convex classes, or ``None``.

    Vertices are labeled in index order; vertex 0 opens class 0 and new
    classes open in first-use order. After each assignment every class is
    replaced by its hull: hull vertices labeled elsewhere kill the branch,
    unlabeled ones are forced into the class.
    """
    kind = ConvexityKind(kind)
    _check(g, kind, "exact_partition")
    n, full = g.n, g.full
    if p < 2 or p > n:
        return None

    def propagate(classes: list[VertexSet], assigned: VertexSet):
        changed = True
        while changed:
            changed = False
            for i, c in enumerate(classes):
                h = hull(g, kind, c)
                if h == c:
                    continue
                if h == full or h & assigned & ~c:
                    return None
                assigned |= h
                classes[i] = h
                changed = True
        return assigned

    def search(classes: list[VertexSet], assigned: VertexSet):
        assigned = propagate(classes, assigned)
        if assigned is None:
            return None
        free = full & ~assigned
        if len(classes) + popcount(free) < p:
            return None
        if not free:
            return classes if len(classes) == p else None
        v = lowest(free)
        bit = 1 << v
        for i in range(len(classes)):
            trial = classes.copy()
            trial[i] |= bit
            found = search(trial, assigned | bit)
            if found:
                return found
        if len(classes) < p:
            found = search(classes + [bit], assigned | bit)
            if found:
                return found
        return None

    found = search([1], 1)
    if found is None:
        return None
    return ConvexFamily(kind, Mode.PARTITION, tuple(found), g)


def enumerate_maximal_proper_convex(g: Graph, kind: ConvexityKind | str) -> list[VertexSet]:
    """All inclusion-maximal convex sets other than ``V(G)``, nonempty ones only.

    Every proper convex set lies in one reachable by starting from a proper
    singleton hull and repeatedly adding a vertex and re-closing, so a
    memoized upward search over those closures finds all maximal ones.
    Returned in ascending bitmask order.
    """
    kind = ConvexityKind(kind)
    _check(g, kind, "enumerate_maximal_proper_convex")
    full = g.full
    seen: set[VertexSet] = set()
    maximal: set[VertexSet] = set()
    stack = []
    for v in range(g.n):
        h = hull(g, kind, 1 << v)
        if h != full and h not in seen:
            seen.add(h)
            stack.append(h)
    while stack:
        c = stack.pop()
        grew = False
        for v in iter_bits(full & ~c):
            h = hull(g, kind, c | 1 << v)
            if h == full:
                continue
            grew = True
            if h not in seen:
                seen.add(h)
                stack.append(h)
        if not grew:
            maximal.add(c)
    return sorted(maximal)


def exact_cover(g: Graph, kind: ConvexityKind | str, p: int) -> ConvexFamily | None:
    """Cover by at most ``p`` distinct proper convex sets, or ``None``.

    Uses only inclusion-maximal proper convex sets and returns a cover of
    minimum size: sizes are tried in increasing order, branching on the
    lowest uncovered vertex.
    """
    kind = ConvexityKind(kind)
    candidates = enumerate_maximal_proper_convex(g, kind)
    full = g.full
    containing = [[c for c in candidates if c >> v & 1] for v in range(g.n)]
    if any(not row for row in containing):
        return None

    def search(chosen: list[VertexSet], covered: VertexSet, budget: int):
        if covered == full:
            return chosen
        if budget == 0:
            return None
        v = lowest(full & ~covered)
        for c in containing[v]:
            found = search(chosen + [c], covered | c, budget - 1)
            if found:
                return found
        return None

    for k in range(1, p + 1):
        found = search([], 0, k)
        if found:
            return ConvexFamily(kind, Mode.COVER, tuple(found), g)
    return None

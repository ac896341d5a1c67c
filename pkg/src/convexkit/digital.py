"""Digital convexity: witness sets, covers via total domination, bipartite 2-partitions."""

from __future__ import annotations

from .convexity import ConvexFamily, ConvexityKind, Mode, is_convex, validate_family
from .graph import (
    Graph,
    VertexSet,
    bfs_distances,
    bipartition,
    closed_neighborhood,
    complement,
    connected_components,
    iter_bits,
    lowest,
    popcount,
)
from .limits import check_size

TDS_CAP = 64


def dconvex_from_witness(g: Graph, w: VertexSet) -> VertexSet:
    """The d-convex set ``V - N[w]``."""
    return g.full & ~closed_neighborhood(g, w)


def dconvex_witness(g: Graph, s: VertexSet) -> VertexSet | None:
    """Witness ``W = V - N[s]`` with ``V - N[W] == s``, or ``None`` if ``s`` is not d-convex."""
    w = g.full & ~closed_neighborhood(g, s)
    if dconvex_from_witness(g, w) != s:
        return None
    return w


def _greedy_tds(g: Graph) -> VertexSet:
    full = g.full
    chosen = dominated = 0
    while dominated != full:
        best = max(range(g.n), key=lambda v: (popcount(g.adj[v] & ~dominated), -v))
        chosen |= 1 << best
        dominated |= g.adj[best]
    return chosen


def min_total_dominating_set(g: Graph) -> VertexSet | None:
    """A minimum set ``D`` such that every vertex has a neighbor in ``D``.

    ``None`` iff some vertex is isolated. Branch and bound: the lowest
    undominated vertex must get one of its neighbors into ``D``; a branch
    dies when even the best-covering remaining picks cannot finish within the
    incumbent size.
    """
    check_size(g.n, TDS_CAP, "min_total_dominating_set")
    if any(row == 0 for row in g.adj):
        return None
    full = g.full
    adj = g.adj
    max_reach = max(popcount(row) for row in adj)
    best = _greedy_tds(g)
    best_size = popcount(best)

    def search(chosen: VertexSet, size: int, dominated: VertexSet):
        nonlocal best, best_size
        if dominated == full:
            if size < best_size:
                best, best_size = chosen, size
            return
        missing = popcount(full & ~dominated)
        if size + -(-missing // max_reach) >= best_size:
            return
        v = lowest(full & ~dominated)
        for u in iter_bits(adj[v] & ~chosen):
            search(chosen | 1 << u, size + 1, dominated | adj[u])

    search(0, 0, 0)
    return best


def dconvex_cover(g: Graph, p: int) -> ConvexFamily | None:
    """Digital cover with at most ``p`` classes from a total dominating set of the complement.

    Each ``w`` of a minimum total dominating set of the complement yields the
    class ``V - N_G[w]``, which is exactly the complement-neighborhood of ``w``.
    """
    comp = complement(g)
    tds = min_total_dominating_set(comp)
    if tds is None or popcount(tds) > p:
        return None
    classes = []
    for w in iter_bits(tds):
        c = dconvex_from_witness(g, 1 << w)
        if c not in classes:
            classes.append(c)
    return ConvexFamily(ConvexityKind.DIGITAL, Mode.COVER, tuple(classes), g)


def bipartite_dconvex_2partition(g: Graph) -> ConvexFamily | None:
    """Digital 2-partition of a bipartite graph, or ``None`` when none exists.

    Disconnected graphs split off the component of vertex 0. A connected
    graph needs two vertices ``u``, ``v`` at distance 3; then
    ``V1 = N[u] + {x in X : N(x) <= N[u]}`` and ``V2 = V - V1``. The side
    ``X`` is taken to contain ``u``; the other side and the swapped pair are
    tried if the result fails validation.
    """
    bip = bipartition(g)
    if bip is None:
        raise ValueError("graph is not bipartite")
    full = g.full
    comps = connected_components(g)
    if len(comps) > 1:
        fam = ConvexFamily(ConvexityKind.DIGITAL, Mode.PARTITION, (comps[0], full & ~comps[0]), g)
        return _checked(fam)
    pair = _distance_three_pair(g)
    if pair is None:
        return None
    u, v = pair
    for a in (u, v):
        own = bip.x if bip.x >> a & 1 else bip.y
        for side in (own, full & ~own):
            na = g.closed(a)
            v1 = na
            for x in iter_bits(side):
                if not g.adj[x] & ~na:
                    v1 |= 1 << x
            v2 = full & ~v1
            if not v2:
                continue
            fam = ConvexFamily(ConvexityKind.DIGITAL, Mode.PARTITION, (v1, v2), g)
            if validate_family(fam, 2)[0]:
                return fam
    raise RuntimeError(f"no valid construction from distance-3 pair {pair}")


def _distance_three_pair(g: Graph) -> tuple[int, int] | None:
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if dist[v] == 3:
                return u, v
    return None


def _checked(fam: ConvexFamily) -> ConvexFamily:
    ok, why = validate_family(fam)
    if not ok:
        raise RuntimeError(f"constructed family failed validation: {why}")
    return fam


def is_dconvex(g: Graph, s: VertexSet) -> bool:
    return is_convex(g, ConvexityKind.DIGITAL, s)

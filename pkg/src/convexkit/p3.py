"""P3 convexity: matching cuts, the K_{r,r} attachment gadget, split-graph covers."""

from __future__ import annotations

from dataclasses import dataclass

from .convexity import ConvexFamily, ConvexityKind, Mode, validate_family
from .graph import (
    Bipartition,
    Graph,
    VertexSet,
    bipartition,
    connected_components,
    is_clique,
    is_independent,
    iter_bits,
    lowest,
    members,
    popcount,
    vertex_set,
)
from .limits import check_size

MATCHING_CUT_CAP = 64


@dataclass(frozen=True)
class Cut:
    a: VertexSet
    b: VertexSet

    def crossing_edges(self, g: Graph) -> list[tuple[int, int]]:
        return [(u, v) for u, v in g.edges() if (self.a >> u & 1) != (self.a >> v & 1)]


@dataclass(frozen=True)
class GadgetResult:
    """A gadget graph with the source graph embedded in it.

    ``embed[v]`` is the gadget vertex of source vertex ``v``; ``extra`` holds
    every gadget vertex outside the embedded copy.
    """

    gprime: Graph
    embed: tuple[int, ...]
    extra: VertexSet
    source: Graph
    r: int | None = None
    p: int | None = None

    @property
    def image(self) -> VertexSet:
        return vertex_set(self.embed)

    def to_source(self, s: VertexSet) -> VertexSet:
        back = {gv: v for v, gv in enumerate(self.embed)}
        return vertex_set(back[x] for x in iter_bits(s & self.image))

    def from_source(self, s: VertexSet) -> VertexSet:
        return vertex_set(self.embed[v] for v in iter_bits(s))


@dataclass(frozen=True)
class SplitPartition:
    k: VertexSet
    s: VertexSet


def is_matching_cut(g: Graph, cut: Cut) -> bool:
    if not cut.a or not cut.b or cut.a & cut.b or cut.a | cut.b != g.full:
        return False
    for v in range(g.n):
        other = cut.b if cut.a >> v & 1 else cut.a
        if popcount(g.adj[v] & other) > 1:
            return False
    return True


def find_matching_cut(g: Graph) -> Cut | None:
    """A cut whose crossing edges form a matching (possibly empty), or ``None``.

    Disconnected graphs split off the component of vertex 0. Otherwise vertex
    0 goes to side ``a`` and the lowest unlabeled vertex adjacent to a labeled
    one is branched on, ``a`` first. Once a vertex has its one crossing
    neighbor, its remaining neighbors are forced onto its own side.
    """
    check_size(g.n, MATCHING_CUT_CAP, "find_matching_cut")
    full = g.full
    comps = connected_components(g)
    if len(comps) > 1:
        return Cut(comps[0], full & ~comps[0])
    if g.n < 2:
        return None
    adj = g.adj

    def propagate(a: VertexSet, b: VertexSet):
        changed = True
        while changed:
            changed = False
            for v in iter_bits(a | b):
                own, other = (a, b) if a >> v & 1 else (b, a)
                cross = adj[v] & other
                if cross & (cross - 1):
                    return None
                if cross:
                    pending = adj[v] & ~(a | b)
                    if pending:
                        if own is a:
                            a |= pending
                        else:
                            b |= pending
                        changed = True
                        break
        return a, b

    def search(a: VertexSet, b: VertexSet):
        state = propagate(a, b)
        if state is None:
            return None
        a, b = state
        free = full & ~(a | b)
        if not free:
            return Cut(a, b) if a and b else None
        touched = 0
        for v in iter_bits(a | b):
            touched |= adj[v]
        v = lowest(free & touched)
        bit = 1 << v
        return search(a | bit, b) or search(a, b | bit)

    return search(1, 0)


def p3_partition_from_cut(g: Graph, cut: Cut) -> ConvexFamily:
    if not is_matching_cut(g, cut):
        raise ValueError("not a matching cut")
    return ConvexFamily(ConvexityKind.P3, Mode.PARTITION, (cut.a, cut.b), g)


def cut_from_p3_partition(g: Graph, fam: ConvexFamily) -> Cut:
    if fam.kind is not ConvexityKind.P3 or fam.mode is not Mode.PARTITION:
        raise ValueError("expected a P3 partition")
    ok, why = validate_family(fam, 2)
    if not ok:
        raise ValueError(f"invalid P3 2-partition: {why}")
    a, b = fam.classes
    return Cut(a, b)


def build_gadget_p3(g: Graph, p: int, bip: Bipartition | None = None) -> GadgetResult:
    """Attach a ``K_{r,r}`` with sides ``A``, ``B`` to a bipartite ``g``, ``r = max(p+2, |X|, |Y|)``.

    The i-th vertex of ``X`` gets one edge to the i-th vertex of ``A``, the
    i-th vertex of ``Y`` one edge to the i-th vertex of ``B``. Source vertices
    keep their labels; ``A`` is ``n..n+r-1`` and ``B`` is ``n+r..n+2r-1``.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    if bip is None:
        bip = bipartition(g)
        if bip is None:
            raise ValueError("graph is not bipartite")
    else:
        _check_bipartition(g, bip)
    n = g.n
    xs, ys = members(bip.x), members(bip.y)
    r = max(p + 2, len(xs), len(ys))
    side_a = list(range(n, n + r))
    side_b = list(range(n + r, n + 2 * r))
    edges = g.edges()
    edges += [(a, b) for a in side_a for b in side_b]
    edges += [(x, side_a[i]) for i, x in enumerate(xs)]
    edges += [(y, side_b[i]) for i, y in enumerate(ys)]
    gprime = Graph.from_edges(n + 2 * r, edges)
    extra = vertex_set(side_a + side_b)
    return GadgetResult(gprime, tuple(range(n)), extra, g, r=r, p=p)


def _check_bipartition(g: Graph, bip: Bipartition) -> None:
    if bip.x & bip.y or bip.x | bip.y != g.full:
        raise ValueError("bipartition does not split the vertex set")
    if not is_independent(g, bip.x) or not is_independent(g, bip.y):
        raise ValueError("bipartition has an edge inside a side")


def lift_p3_partition(gr: GadgetResult, fam: ConvexFamily) -> ConvexFamily:
    """Source p-partition to gadget (p+1)-partition: embed each class, append the ``K_{r,r}``."""
    ok, why = validate_family(fam, gr.p)
    if not ok or fam.kind is not ConvexityKind.P3 or fam.mode is not Mode.PARTITION:
        raise ValueError(f"invalid source P3 partition: {why}")
    classes = [gr.from_source(c) for c in fam.classes] + [gr.extra]
    return ConvexFamily(ConvexityKind.P3, Mode.PARTITION, tuple(classes), gr.gprime)


def project_p3_partition(gr: GadgetResult, fam: ConvexFamily) -> ConvexFamily:
    """Gadget (p+1)-partition back to a source p-partition.

    The class holding the ``K_{r,r}`` copy must hold all of it. Source vertices
    sharing that class cannot touch another class (that would create a
    forbidden three-vertex path through an attachment edge), so they are
    unions of source components and are merged into the last remaining class.
    """
    ok, why = validate_family(fam, None if gr.p is None else gr.p + 1)
    if not ok or fam.kind is not ConvexityKind.P3 or fam.mode is not Mode.PARTITION:
        raise ValueError(f"invalid gadget P3 partition: {why}")
    holders = [i for i, c in enumerate(fam.classes) if c & gr.extra]
    if len(holders) != 1:
        raise ValueError(f"K_{{r,r}} copy is split across classes {holders}")
    k = holders[0]
    stray = fam.classes[k] & ~gr.extra
    rest = [c for i, c in enumerate(fam.classes) if i != k]
    if stray:
        g = gr.gprime
        others = 0
        for c in rest:
            others |= c
        touching = [v for v in iter_bits(stray) if g.adj[v] & others]
        if touching:
            raise ValueError(
                f"gadget class contains source vertices {members(stray)} adjacent to other classes"
            )
        rest[-1] |= stray
    classes = tuple(gr.to_source(c) for c in rest)
    out = ConvexFamily(ConvexityKind.P3, Mode.PARTITION, classes, gr.source)
    ok, why = validate_family(out, len(classes))
    if not ok:
        raise ValueError(f"projected partition is invalid: {why}")
    return out


def split_partition(g: Graph) -> SplitPartition | None:
    """Clique/independent split via the degree sequence, or ``None``.

    With degrees sorted in decreasing order and ``m`` the largest index with
    ``d_m >= m - 1``, the graph is split iff the top ``m`` degrees sum to
    ``m(m-1)`` plus the sum of the remaining degrees; the top ``m`` vertices
    then form the clique.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = max(i + 1 for i in range(g.n) if deg[i] >= i)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    k = vertex_set(order[:m])
    s = g.full & ~k
    if not is_clique(g, k) or not is_independent(g, s):
        raise RuntimeError("degree-sequence split check disagrees with the graph")
    return SplitPartition(k, s)


def cover_to_partition_split(
    g: Graph, sp: SplitPartition, fam: ConvexFamily, p: int | None = None
) -> ConvexFamily:
    """Turn a P3 cover of a split graph into a P3 partition with ``p`` classes.

    Requires every vertex of the independent side to have degree at least 2;
    then every cover class is independent, so each class minus the earlier
    ones stays P3-convex. Emptied classes are dropped, and while fewer than
    ``p`` remain the lowest vertex of the largest class is split off (any
    subset of an independent P3-convex set is P3-convex). ``p`` defaults to
    the number of cover classes.
    """
    if not is_clique(g, sp.k) or not is_independent(g, sp.s) or sp.k | sp.s != g.full or sp.k & sp.s:
        raise ValueError("not a split partition of g")
    low = [v for v in iter_bits(sp.s) if g.degree(v) < 2]
    if low:
        raise ValueError(f"independent-side vertices {low} have degree below 2")
    if fam.kind is not ConvexityKind.P3:
        raise ValueError("expected a P3 cover")
    ok, why = validate_family(fam)
    if not ok:
        raise ValueError(f"invalid P3 cover: {why}")
    if p is None:
        p = len(fam.classes)
    if p > g.n:
        raise ValueError(f"no {p}-partition derivable: only {g.n} vertices")
    classes = []
    used = 0
    for c in fam.classes:
        rest = c & ~used
        used |= c
        if rest:
            classes.append(rest)
    if len(classes) > p:
        raise ValueError(f"cover yields {len(classes)} disjoint classes, more than {p}")
    while len(classes) < p:
        i = max(range(len(classes)), key=lambda j: (popcount(classes[j]), -j))
        bit = 1 << lowest(classes[i])
        classes[i] &= ~bit
        classes.append(bit)
    out = ConvexFamily(ConvexityKind.P3, Mode.PARTITION, tuple(classes), g)
    ok, why = validate_family(out, p)
    if not ok:
        raise RuntimeError(f"transformed partition failed validation: {why}")
    return out

"""Monophonic convexity: clique separators, 2-covers, and the two-apex gadget."""

from __future__ import annotations

from dataclasses import dataclass

from .convexity import ConvexFamily, ConvexityKind, Mode, hull, validate_family
from .exact import exact_partition
from .graph import (
    Graph,
    VertexSet,
    bipartition,
    complement,
    component_of,
    connected_components,
    is_clique,
    is_connected,
    iter_bits,
    lowest,
    members,
    popcount,
    vertex_set,
)
from .limits import check_size
from .p3 import GadgetResult

CLIQUE_PARTITION_CAP = 40


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices of ``g`` (iterative Hopcroft-Tarjan), ascending."""
    n = g.n
    nbrs = [members(row) for row in g.adj]
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    time = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = time
        time += 1
        children = 0
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = time
                    time += 1
                    if v == root:
                        children += 1
                    stack.append((w, v, iter(nbrs[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cut[parent] = True
        if children > 1:
            cut[root] = True
    return [v for v in range(n) if cut[v]]


def minimal_elimination_madj(g: Graph) -> list[list[int]]:
    """MCS-M: for each vertex, its later-eliminated neighbors in a minimal triangulation.

    Vertices are numbered from ``n`` down to 1 by maximum weight (lowest
    index on ties). When ``v`` is numbered, every unnumbered ``u`` reachable
    from ``v`` through unnumbered vertices of weight strictly below ``w(u)``
    gains weight and the fill edge ``uv``. O(n m) with a bucket queue.
    """
    n = g.n
    nbrs = [members(row) for row in g.adj]
    weight = [0] * n
    numbered = [False] * n
    madj: list[list[int]] = [[] for _ in range(n)]
    inf = n + 1
    for _ in range(n):
        v = max((u for u in range(n) if not numbered[u]), key=lambda u: (weight[u], -u))
        numbered[v] = True
        # reach[u]: least possible max weight of the inner vertices of a v-u path
        reach = [inf] * n
        done = [False] * n
        buckets: list[list[int]] = [[] for _ in range(n + 2)]
        for u in nbrs[v]:
            if not numbered[u]:
                reach[u] = -1
                buckets[0].append(u)
        hits = []
        for level in range(n + 2):
            bucket = buckets[level]
            while bucket:
                x = bucket.pop()
                r = reach[x]
                if done[x] or r + 1 != level:
                    continue
                done[x] = True
                if r < weight[x]:
                    hits.append(x)
                through = max(r, weight[x])
                for y in nbrs[x]:
                    if not numbered[y] and not done[y] and through < reach[y]:
                        reach[y] = through
                        buckets[through + 1].append(y)
        for u in hits:
            weight[u] += 1
            madj[u].append(v)
    return madj


def _separates(g: Graph, c: VertexSet) -> bool:
    rest = g.full & ~c
    return bool(rest) and component_of(g, lowest(rest), rest) != rest


def find_clique_separator(g: Graph) -> VertexSet | None:
    """A clique whose removal disconnects ``g``, or ``None``.

    The lowest cut vertex wins when there is one. Otherwise candidates are the
    later-eliminated neighborhoods of a minimal elimination ordering, which
    include every clique minimal separator; the smallest candidate (then the
    lexicographically least) that is a clique and separates is returned.
    """
    if not is_connected(g):
        raise ValueError("graph must be connected")
    cuts = articulation_points(g)
    if cuts:
        return 1 << cuts[0]
    return triangulation_clique_separator(g)


def triangulation_clique_separator(g: Graph) -> VertexSet | None:
    """Clique separator search over the MCS-M candidate sets alone (no cut-vertex shortcut)."""
    best = None
    seen = set()
    for row in minimal_elimination_madj(g):
        c = vertex_set(row)
        if not c or c in seen:
            continue
        seen.add(c)
        if is_clique(g, c) and _separates(g, c):
            key = (popcount(c), members(c))
            if best is None or key < best[0]:
                best = (key, c)
    return None if best is None else best[1]


def all_clique_separators(g: Graph) -> list[VertexSet]:
    """Every clique separator, by enumerating all cliques; small graphs only."""
    check_size(g.n, 20, "all_clique_separators")
    out = []

    def extend(clique: VertexSet, candidates: VertexSet):
        if clique and _separates(g, clique):
            out.append(clique)
        for v in iter_bits(candidates):
            extend(clique | 1 << v, candidates & g.adj[v] & ~((1 << (v + 1)) - 1))

    extend(0, g.full)
    return sorted(out, key=lambda c: (popcount(c), members(c)))


def mconvex_from_separator(g: Graph, c: VertexSet, comps: list[VertexSet]) -> VertexSet:
    """Union of the chosen components of ``G - c`` together with ``c``."""
    if not is_clique(g, c) or not _separates(g, c):
        raise ValueError(f"{members(c)} is not a clique separator")
    all_comps = connected_components(g, g.full & ~c)
    chosen = set(comps)
    if not chosen or not chosen <= set(all_comps) or len(chosen) == len(all_comps):
        raise ValueError("comps must be a nonempty proper subset of the components of G - c")
    out = c
    for comp in chosen:
        out |= comp
    return out


def mconvex_2cover(g: Graph) -> ConvexFamily | None:
    """Monophonic 2-cover, or ``None``; polynomial.

    Disconnected: the component of vertex 0 and the rest. With a clique
    separator ``C``: the component ``G1`` of ``G - C`` holding its lowest
    vertex gives ``{G1 + C, (V - G1) + C}``. Otherwise the graph has a 2-cover
    exactly when it is co-bipartite, covered by its two cliques.
    """
    full = g.full
    comps = connected_components(g)
    if len(comps) > 1:
        return _family(g, (comps[0], full & ~comps[0]))
    if g.n < 2:
        return None
    c = find_clique_separator(g)
    if c is not None:
        g1 = connected_components(g, full & ~c)[0]
        return _family(g, (g1 | c, (full & ~g1) | c))
    if _too_sparse_for_cobipartite(g):
        return None
    bip = bipartition(complement(g))
    if bip is None:
        return None
    x, y = bip.x, bip.y
    if not y:
        # complete graph: any vertex against the rest
        top = 1 << (g.n - 1)
        x, y = x & ~top, top
    return _family(g, (x, y))


def _too_sparse_for_cobipartite(g: Graph) -> bool:
    # two cliques covering n vertices carry at least C(a,2) + C(n-a,2) edges
    a, b = g.n // 2, g.n - g.n // 2
    return g.m < a * (a - 1) // 2 + b * (b - 1) // 2


def _family(g: Graph, classes) -> ConvexFamily:
    fam = ConvexFamily(ConvexityKind.MONOPHONIC, Mode.COVER, tuple(classes), g)
    if g.n <= 64:
        ok, why = validate_family(fam, 2)
        if not ok:
            raise RuntimeError(f"constructed 2-cover failed validation: {why}")
    return fam


def mhull_pair(g: Graph, u: int, v: int) -> VertexSet:
    if u == v:
        raise ValueError("u and v must differ")
    return hull(g, ConvexityKind.MONOPHONIC, 1 << u | 1 << v)


def build_gadget_mono(g: Graph) -> GadgetResult:
    """Add two nonadjacent apexes ``n`` and ``n+1``, each adjacent to every source vertex."""
    if g.n < 2:
        raise ValueError("source graph needs at least two vertices")
    if g.m == g.n * (g.n - 1) // 2:
        raise ValueError("source graph must not be complete")
    n = g.n
    u, v = n, n + 1
    edges = g.edges() + [(x, u) for x in range(n)] + [(x, v) for x in range(n)]
    gprime = Graph.from_edges(n + 2, edges)
    return GadgetResult(gprime, tuple(range(n)), 1 << u | 1 << v, g)


def clique_partition(g: Graph, parts: int) -> list[VertexSet] | None:
    """Partition ``V`` into exactly ``parts`` nonempty cliques, or ``None``.

    Backtracking coloring of the complement: vertices in index order join an
    existing clique they are fully adjacent to, or open a new one.
    """
    check_size(g.n, CLIQUE_PARTITION_CAP, "clique_partition")
    n, adj = g.n, g.adj
    if parts < 1 or parts > n:
        return None

    def search(v: int, classes: list[VertexSet]):
        if len(classes) + (n - v) < parts:
            return None
        if v == n:
            return classes if len(classes) == parts else None
        bit = 1 << v
        for i, c in enumerate(classes):
            if c & adj[v] == c:
                trial = classes.copy()
                trial[i] |= bit
                found = search(v + 1, trial)
                if found:
                    return found
        if len(classes) < parts:
            return search(v + 1, classes + [bit])
        return None

    return search(0, [])


@dataclass(frozen=True)
class MonoGadgetReport:
    p: int
    gadget: GadgetResult
    gadget_partition: ConvexFamily | None
    clique_parts: int | None
    cliques: tuple[VertexSet, ...] | None
    padded: ConvexFamily | None

    @property
    def gadget_partition_exists(self) -> bool:
        return self.gadget_partition is not None

    @property
    def agree(self) -> bool:
        return self.gadget_partition_exists == (self.clique_parts is not None)


def pad_clique_partition(gr: GadgetResult, cliques: list[VertexSet], p: int) -> ConvexFamily:
    """Gadget p-partition from a clique partition of the source into ``p-2``, ``p-1`` or ``p`` parts.

    Missing classes are made up with apex singletons; surplus apexes join the
    first (and second) clique.
    """
    ell = len(cliques)
    u, v = members(gr.extra)
    classes = [gr.from_source(c) for c in cliques]
    if ell == p - 2:
        classes += [1 << u, 1 << v]
    elif ell == p - 1:
        classes[0] |= 1 << u
        classes.append(1 << v)
    elif ell == p and ell >= 2:
        classes[0] |= 1 << u
        classes[1] |= 1 << v
    else:
        raise ValueError(f"{ell} cliques cannot be padded to {p} classes")
    return ConvexFamily(ConvexityKind.MONOPHONIC, Mode.PARTITION, tuple(classes), gr.gprime)


def mono_partition_equiv(g: Graph, p: int) -> MonoGadgetReport:
    """Solve both sides of the two-apex equivalence independently.

    Gadget side: exact monophonic p-partition search. Source side: clique
    partitions into ``l`` parts, smallest ``l`` in ``[p-2, p]`` first.
    """
    if p < 3:
        raise ValueError("p must be at least 3")
    gr = build_gadget_mono(g)
    found = exact_partition(gr.gprime, ConvexityKind.MONOPHONIC, p)
    for ell in range(max(1, p - 2), p + 1):
        cliques = clique_partition(g, ell)
        if cliques is not None:
            padded = pad_clique_partition(gr, cliques, p)
            return MonoGadgetReport(p, gr, found, ell, tuple(cliques), padded)
    return MonoGadgetReport(p, gr, found, None, None, None)

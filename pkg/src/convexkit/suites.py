"""Property suites checking each constructive result against the brute-force oracles.

Each suite returns a :class:`SuiteResult`; ``run_suite(name)`` dispatches by
name and ``SUITES`` lists them in order.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .convexity import ConvexityKind, interval, is_convex, validate_family
from .digital import bipartite_dconvex_2partition, dconvex_cover, dconvex_witness, min_total_dominating_set
from .exact import exact_cover, exact_partition
from .graph import (
    Graph,
    bipartition,
    complement,
    connected_components,
    diameter,
    is_clique,
    is_co_bipartite,
    is_connected,
    is_independent,
    iter_bits,
    members,
    popcount,
    vertex_set,
)
from .mono import (
    all_clique_separators,
    find_clique_separator,
    mconvex_2cover,
    mconvex_from_separator,
    mhull_pair,
    mono_partition_equiv,
)
from .p3 import (
    SplitPartition,
    build_gadget_p3,
    cover_to_partition_split,
    cut_from_p3_partition,
    find_matching_cut,
    is_matching_cut,
    lift_p3_partition,
    p3_partition_from_cut,
    project_p3_partition,
)

DIGITAL = ConvexityKind.DIGITAL
P3 = ConvexityKind.P3
P3STAR = ConvexityKind.P3STAR
MONO = ConvexityKind.MONOPHONIC

SEED = 20240501


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < 20:
            self.failures.append(msg)
        else:
            self.failures[-1] = f"... and more (last: {msg})"

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" [{'; '.join(self.notes)}]" if self.notes else ""
        return f"{status} {self.name}: {self.checked} checks in {self.seconds:.1f}s{extra}"


# Graph families


def labeled_graphs(n: int) -> Iterator[Graph]:
    for code in range(2 ** (n * (n - 1) // 2)):
        yield Graph.from_code(n, code)


def atlas_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on ``n`` vertices (``n <= 7``)."""
    import networkx as nx

    return [Graph.from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n]


def random_graph(rng: random.Random, n: int, density: float | None = None) -> Graph:
    q = rng.uniform(0.25, 0.75) if density is None else density
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < q])


def random_connected_graph(rng: random.Random, n: int, density: float | None = None) -> Graph:
    while True:
        g = random_graph(rng, n, density)
        if is_connected(g):
            return g


def random_connected_bipartite(rng: random.Random, n: int) -> Graph:
    while True:
        k = rng.randint(1, n - 1)
        q = rng.uniform(0.3, 0.8)
        edges = [(u, v) for u in range(k) for v in range(k, n) if rng.random() < q]
        perm = list(range(n))
        rng.shuffle(perm)
        g = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])
        if is_connected(g):
            return g


def sparse_connected_graph(rng: random.Random, n: int, m: int, two_connected: bool = False) -> Graph:
    """Random spanning tree (or Hamiltonian cycle) plus random extra edges up to ``m``."""
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        j = i - 1 if two_connected else rng.randrange(i)
        edges.add((min(perm[i], perm[j]), max(perm[i], perm[j])))
    if two_connected:
        edges.add((min(perm[0], perm[-1]), max(perm[0], perm[-1])))
    while len(edges) < m:
        a, b = rng.sample(range(n), 2)
        edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, sorted(edges))


def split_graphs(n: int) -> Iterator[tuple[Graph, SplitPartition]]:
    """Split graphs on ``n`` vertices whose independent side has degrees >= 2, up to isomorphism.

    The clique is ``0..k-1``; each independent vertex picks a neighborhood of
    size >= 2 inside it, taken as a multiset.
    """
    for k in range(n, 1, -1) if n >= 2 else [n]:
        clique = list(range(k))
        hoods = [
            vertex_set(c) for size in range(2, k + 1) for c in itertools.combinations(clique, size)
        ]
        base = [(u, v) for u in range(k) for v in range(u + 1, k)]
        for pick in itertools.combinations_with_replacement(hoods, n - k):
            edges = list(base)
            for i, hood in enumerate(pick):
                edges += [(k + i, c) for c in iter_bits(hood)]
            g = Graph.from_edges(n, edges)
            k_mask = (1 << k) - 1
            yield g, SplitPartition(k_mask, g.full & ~k_mask)


def cliques(g: Graph) -> Iterator[int]:
    def extend(clique, candidates):
        if clique:
            yield clique
        for v in iter_bits(candidates):
            yield from extend(clique | 1 << v, candidates & g.adj[v] & ~((1 << (v + 1)) - 1))

    yield from extend(0, g.full)


def mono_convex_by_paths(g: Graph, s: int) -> bool:
    """Monophonic convexity straight from the induced-path interval."""
    return interval(g, MONO, s) == s


# Suites


def suite_dconvex_witness(res: SuiteResult) -> None:
    """Digital convexity by definition vs existence of a closed-neighborhood witness, all graphs n=5."""
    for g in labeled_graphs(5):
        for s in range(1 << 5):
            res.checked += 1
            by_def = interval(g, DIGITAL, s) == s
            if by_def != (dconvex_witness(g, s) is not None):
                res.fail(f"{g} S={members(s)}")


def suite_dconvex_cover(res: SuiteResult) -> None:
    """Digital p-cover exists iff the complement has a total dominating set of size <= p."""
    rng = random.Random(SEED)
    cases = [(g, p) for g in labeled_graphs(5) for p in range(1, 6)]
    for _ in range(300):
        g = random_graph(rng, rng.randint(6, 8))
        cases += [(g, p) for p in range(1, g.n + 1)]
    tds_cache: dict[Graph, int | None] = {}
    for g, p in cases:
        res.checked += 1
        if g not in tds_cache:
            tds = min_total_dominating_set(complement(g))
            tds_cache[g] = None if tds is None else popcount(tds)
        size = tds_cache[g]
        oracle = exact_cover(g, DIGITAL, p)
        built = dconvex_cover(g, p)
        tds_ok = size is not None and size <= p
        if (oracle is not None) != tds_ok or (built is not None) != tds_ok:
            res.fail(f"{g} p={p} oracle={oracle is not None} tds={size}")
        if built is not None and not validate_family(built, p)[0]:
            res.fail(f"{g} p={p} constructed cover invalid")


def suite_bipartite_dconvex(res: SuiteResult) -> None:
    """Bipartite digital 2-partition construction vs diameter >= 3 vs exact search."""
    rng = random.Random(SEED + 3)
    graphs = [g for n in range(1, 7) for g in labeled_graphs(n) if is_connected(g) and bipartition(g)]
    graphs += [random_connected_bipartite(rng, n) for n in (7, 8) for _ in range(150)]
    for g in graphs:
        res.checked += 1
        built = bipartite_dconvex_2partition(g)
        oracle = exact_partition(g, DIGITAL, 2)
        wide = diameter(g) >= 3
        if (built is not None) != wide or (oracle is not None) != wide:
            res.fail(f"{g} built={built is not None} diam>=3={wide} oracle={oracle is not None}")
        if built is not None and not validate_family(built, 2)[0]:
            res.fail(f"{g} emitted partition invalid")
    res.notes.append(f"{len(graphs)} connected bipartite graphs")


def suite_matching_cut(res: SuiteResult) -> None:
    """Matching cut exists iff a P3-convex 2-partition exists; certificates translate both ways."""
    rng = random.Random(SEED + 4)
    graphs = [g for n in range(1, 6) for g in labeled_graphs(n)]
    graphs += [random_graph(rng, rng.randint(6, 8)) for _ in range(300)]
    for g in graphs:
        res.checked += 1
        cut = find_matching_cut(g)
        fam = exact_partition(g, P3, 2)
        if (cut is None) != (fam is None):
            res.fail(f"{g} cut={cut} partition={fam}")
            continue
        if cut is not None:
            if not validate_family(p3_partition_from_cut(g, cut), 2)[0]:
                res.fail(f"{g} cut->partition invalid")
            if not is_matching_cut(g, cut_from_p3_partition(g, fam)):
                res.fail(f"{g} partition->cut invalid")


def suite_p3_gadget(res: SuiteResult) -> None:
    """Source P3 2-partition iff gadget P3 3-partition; lift/project round trip."""
    graphs = [g for n in range(1, 6) for g in labeled_graphs(n) if is_connected(g) and bipartition(g)]
    for g in graphs:
        res.checked += 1
        gr = build_gadget_p3(g, 2)
        src = exact_partition(g, P3, 2)
        gad = exact_partition(gr.gprime, P3, 3)
        if (src is None) != (gad is None):
            res.fail(f"{g} source={src is not None} gadget={gad is not None}")
            continue
        if src is None:
            continue
        lifted = lift_p3_partition(gr, src)
        if not validate_family(lifted, 3)[0]:
            res.fail(f"{g} lifted partition invalid")
        if project_p3_partition(gr, lifted).classes != src.classes:
            res.fail(f"{g} project(lift) is not the identity")
        if gr.extra not in gad.classes:
            res.fail(f"{g} gadget class is not exactly the K_rr copy")
        try:
            project_p3_partition(gr, gad)
        except ValueError as exc:
            res.fail(f"{g} projection failed: {exc}")
    res.notes.append(f"{len(graphs)} connected bipartite graphs")


def suite_triangle_free(res: SuiteResult) -> None:
    """On triangle-free graphs P3- and P3*-convexity coincide."""
    for n in range(1, 7):
        for g in labeled_graphs(n):
            if any(g.adj[u] & g.adj[v] for u, v in g.edges()):
                continue
            for s in range(1 << n):
                res.checked += 1
                if is_convex(g, P3, s) != is_convex(g, P3STAR, s):
                    res.fail(f"{g} S={members(s)}")


def suite_split_cover(res: SuiteResult) -> None:
    """Split graphs with independent-side degrees >= 2: P3 p-cover iff P3 p-partition."""
    graphs = 0
    for n in range(1, 8):
        for g, sp in split_graphs(n):
            graphs += 1
            for p in range(1, n + 1):
                res.checked += 1
                cover = exact_cover(g, P3, p)
                part = exact_partition(g, P3, p)
                if (cover is None) != (part is None):
                    res.fail(f"{g} p={p} cover={cover is not None} partition={part is not None}")
                if cover is None:
                    continue
                if not all(is_independent(g, c) for c in cover.classes):
                    res.fail(f"{g} p={p} cover class not independent")
                out = cover_to_partition_split(g, sp, cover, p)
                if not validate_family(out, p)[0]:
                    res.fail(f"{g} p={p} transformed partition invalid")
    res.notes.append(f"{graphs} split graphs")


def suite_mono_structure(res: SuiteResult) -> None:
    """Cliques are m-convex; separator unions are m-convex; separator-free graphs behave as claimed."""
    for n in range(1, 7):
        for g in labeled_graphs(n):
            for c in cliques(g):
                res.checked += 1
                if not mono_convex_by_paths(g, c):
                    res.fail(f"{g} clique {members(c)} not m-convex")

    for n in range(2, 8):
        for g in atlas_graphs(n):
            if not is_connected(g):
                continue
            for c in all_clique_separators(g):
                comps = connected_components(g, g.full & ~c)
                for k in range(1, len(comps)):
                    for chosen in itertools.combinations(comps, k):
                        res.checked += 1
                        s = mconvex_from_separator(g, c, list(chosen))
                        if not mono_convex_by_paths(g, s):
                            res.fail(f"{g} separator {members(c)} union {members(s)} not m-convex")

    rng = random.Random(SEED + 8)
    pool = [g for n in range(1, 8) for g in atlas_graphs(n)]
    sampled = 0
    while sampled < 300:
        g = random_connected_graph(rng, 8, rng.uniform(0.4, 0.85))
        if find_clique_separator(g) is None:
            pool.append(g)
            sampled += 1
    separator_free = 0
    for g in pool:
        if not is_connected(g) or all_clique_separators(g):
            continue
        separator_free += 1
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    res.checked += 1
                    if mhull_pair(g, u, v) != g.full:
                        res.fail(f"{g} pair {u},{v} does not hull to V")
        for s in range(1, g.full):
            if mono_convex_by_paths(g, s):
                res.checked += 1
                if not is_clique(g, s):
                    res.fail(f"{g} proper m-convex set {members(s)} is not a clique")
        if g.n < 2:
            # a single vertex admits no two nonempty proper classes
            continue
        res.checked += 1
        if (exact_cover(g, MONO, 2) is not None) != is_co_bipartite(g):
            res.fail(f"{g} 2-cover existence differs from co-bipartiteness")
    res.notes.append(f"{separator_free} separator-free graphs")


def suite_mono_2cover(res: SuiteResult) -> None:
    """Polynomial m-convex 2-cover decision vs exact search, plus a large sparse instance."""
    rng = random.Random(SEED + 9)
    graphs = [g for n in range(1, 7) for g in labeled_graphs(n) if is_connected(g)]
    graphs += [random_connected_graph(rng, rng.randint(7, 9)) for _ in range(300)]
    for g in graphs:
        res.checked += 1
        fast = mconvex_2cover(g)
        oracle = exact_cover(g, MONO, 2)
        if (fast is None) != (oracle is None):
            res.fail(f"{g} fast={fast is not None} oracle={oracle is not None}")
    for two_connected in (False, True):
        big = sparse_connected_graph(rng, 2000, 6000, two_connected)
        start = time.perf_counter()
        mconvex_2cover(big)
        took = time.perf_counter() - start
        res.checked += 1
        label = "2-connected" if two_connected else "tree-based"
        res.notes.append(f"n=2000 {label}: {took:.2f}s")
        if took >= 10:
            res.fail(f"n=2000 {label} instance took {took:.1f}s")


def suite_mono_gadget(res: SuiteResult) -> None:
    """Two-apex gadget has an m-convex p-partition iff the source splits into l cliques, p-2 <= l <= p."""
    for n in range(2, 6):
        complete_code = 2 ** (n * (n - 1) // 2) - 1
        for code in range(complete_code):
            g = Graph.from_code(n, code)
            for p in (3, 4):
                res.checked += 1
                rep = mono_partition_equiv(g, p)
                if not rep.agree:
                    res.fail(f"{g} p={p} gadget={rep.gadget_partition_exists} cliques={rep.clique_parts}")
                if rep.gadget_partition is not None and not validate_family(rep.gadget_partition, p)[0]:
                    res.fail(f"{g} p={p} oracle partition invalid")
                if rep.padded is not None and not validate_family(rep.padded, p)[0]:
                    res.fail(f"{g} p={p} padded certificate invalid")


SUITES: dict[str, Callable[[SuiteResult], None]] = {
    "dconvex-witness": suite_dconvex_witness,
    "dconvex-cover": suite_dconvex_cover,
    "bipartite-dconvex": suite_bipartite_dconvex,
    "matching-cut": suite_matching_cut,
    "p3-gadget": suite_p3_gadget,
    "triangle-free": suite_triangle_free,
    "split-cover": suite_split_cover,
    "mono-structure": suite_mono_structure,
    "mono-2cover": suite_mono_2cover,
    "mono-gadget": suite_mono_gadget,
}


def run_suite(name: str) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    res = SuiteResult(name)
    start = time.perf_counter()
    SUITES[name](res)
    res.seconds = time.perf_counter() - start
    return res

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import C4, K3, P4, S, TWO_K2, graph_and_set, graphs
from convexkit.convexity import interval, is_convex, validate_family
from convexkit.digital import (
    bipartite_dconvex_2partition,
    dconvex_cover,
    dconvex_from_witness,
    dconvex_witness,
    min_total_dominating_set,
)
from convexkit.exact import exact_cover, exact_partition
from convexkit.graph import Graph, complement, cycle_graph, diameter, is_bipartite, is_connected, popcount


def brute_tds_size(g):
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            dom = 0
            for v in combo:
                dom |= g.adj[v]
            if dom == g.full:
                return k
    return None


def test_witness_examples():
    assert dconvex_from_witness(P4, S(0)) == S(2, 3)
    assert dconvex_from_witness(P4, 0) == P4.full
    assert dconvex_from_witness(C4, S(2)) == S(0)
    assert dconvex_witness(P4, S(2, 3)) == S(0)
    assert dconvex_witness(K3, S(0)) is None
    assert dconvex_witness(C4, C4.full) == 0


def test_tds_examples():
    tds = min_total_dominating_set(complement(P4))
    assert popcount(tds) == 2 and tds == S(0, 3)
    assert min_total_dominating_set(TWO_K2) == TWO_K2.full
    assert min_total_dominating_set(Graph.from_edges(3, [(0, 1)])) is None


def test_cover_examples():
    assert dconvex_cover(P4, 2).as_lists() == [[2, 3], [0, 1]]
    assert dconvex_cover(C4, 3) is None
    assert sorted(dconvex_cover(C4, 4).as_lists()) == [[0], [1], [2], [3]]
    for p in range(1, 5):
        assert dconvex_cover(K3, p) is None


def test_bipartite_2partition_examples():
    assert bipartite_dconvex_2partition(P4).as_lists() == [[0, 1], [2, 3]]
    assert bipartite_dconvex_2partition(C4) is None
    assert bipartite_dconvex_2partition(TWO_K2).as_lists() == [[0, 2], [1, 3]]
    with pytest.raises(ValueError):
        bipartite_dconvex_2partition(cycle_graph(5))


@given(graph_and_set(max_n=7))
def test_witness_characterizes_convexity(gs):
    g, s = gs
    w = dconvex_witness(g, s)
    assert (w is not None) == is_convex(g, "digital", s)
    if w is not None:
        assert dconvex_from_witness(g, w) == s


@given(graph_and_set(max_n=7))
def test_every_witness_gives_convex_set(gs):
    g, w = gs
    assert is_convex(g, "digital", dconvex_from_witness(g, w))


@given(graphs(max_n=8))
def test_tds_is_minimum(g):
    tds = min_total_dominating_set(g)
    size = brute_tds_size(g)
    if size is None:
        assert tds is None
        return
    dom = 0
    for v in range(g.n):
        if tds >> v & 1:
            dom |= g.adj[v]
    assert dom == g.full
    assert popcount(tds) == size


@given(graphs(max_n=6), st.integers(1, 6))
def test_cover_agrees_with_oracle(g, p):
    built = dconvex_cover(g, p)
    oracle = exact_cover(g, "digital", p)
    assert (built is None) == (oracle is None)
    if built is not None:
        assert validate_family(built, p) == (True, None)


@given(graphs(max_n=7))
def test_two_partition_needs_diameter_three(g):
    if is_connected(g) and exact_partition(g, "digital", 2) is not None:
        assert diameter(g) >= 3


@pytest.mark.parametrize("n", range(1, 7))
def test_bipartite_construction_exhaustive(n):
    for code in range(2 ** (n * (n - 1) // 2)):
        g = Graph.from_code(n, code)
        if not is_bipartite(g):
            continue
        built = bipartite_dconvex_2partition(g)
        assert (built is None) == (exact_partition(g, "digital", 2) is None)
        if built is not None:
            assert validate_family(built, 2) == (True, None)

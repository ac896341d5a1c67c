import math

import networkx as nx
import pytest
from hypothesis import given

from conftest import C4, C5, K3, P4, S, TWO_K2, graph_and_set, graphs
from convexkit.graph import (
    Graph,
    GraphFormatError,
    bipartition,
    closed_neighborhood,
    complement,
    connected_components,
    diameter,
    distance_matrix,
    empty_graph,
    format_graph,
    is_clique,
    is_co_bipartite,
    members,
    parse_graph,
    vertex_set,
)


def test_closed_neighborhood_examples():
    assert closed_neighborhood(P4, S(0)) == S(0, 1)
    assert closed_neighborhood(C4, 0) == 0
    assert closed_neighborhood(C4, S(0)) == S(0, 1, 3)


def test_complement_examples():
    assert complement(K3) == empty_graph(3)
    assert sorted(complement(P4).edges()) == [(0, 2), (0, 3), (1, 3)]
    assert sorted(complement(C4).edges()) == [(0, 2), (1, 3)]


def test_diameter_examples():
    assert diameter(P4) == 3
    assert diameter(C4) == 2
    assert diameter(TWO_K2) == math.inf


def test_bipartition_examples():
    bip = bipartition(C4)
    assert (bip.x, bip.y) == (S(0, 2), S(1, 3))
    assert bipartition(C5) is None
    assert complement(C5).edges() != C5.edges()
    assert nx.is_isomorphic(complement(C5).to_networkx(), C5.to_networkx())
    assert not is_co_bipartite(C5)
    assert is_co_bipartite(K3)


def test_graph_rejects_bad_input():
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphFormatError):
        Graph(2, [0b10, 0])
    with pytest.raises(GraphFormatError):
        Graph(0, [])


def test_graph_is_immutable_and_hashable():
    with pytest.raises(AttributeError):
        P4.n = 5
    assert hash(P4) == hash(Graph.from_edges(4, [(2, 3), (0, 1), (1, 2)]))


def test_parse_format_roundtrip():
    text = "# comment\n4 3\n0 1\n\n1 2\n# inner\n2 3\n"
    g = parse_graph(text)
    assert g == P4
    assert parse_graph(format_graph(g, ["x"])) == g


@pytest.mark.parametrize(
    "text",
    [
        "",
        "4\n",
        "3 2\n0 1\n",
        "3 1\n0 1\n1 2\n",
        "3 2\n0 1\n1 0\n",
        "3 1\n0 0\n",
        "3 1\n0 5\n",
        "3 1\n0 x\n",
        "0 0\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@given(graph_and_set(), graph_and_set())
def test_closed_neighborhood_extensive_and_monotone(a, b):
    g, s = a
    t = b[1] & g.full
    ns = closed_neighborhood(g, s)
    assert ns & s == s
    assert closed_neighborhood(g, s | t) & ns == ns


@given(graphs())
def test_against_networkx(g):
    h = g.to_networkx()
    dist = distance_matrix(g)
    lengths = dict(nx.all_pairs_shortest_path_length(h))
    for u in range(g.n):
        for v in range(g.n):
            assert dist[u][v] == lengths[u].get(v, math.inf)
    if nx.is_connected(h):
        assert diameter(g) == nx.diameter(h)
    else:
        assert diameter(g) == math.inf
    comps = sorted(sorted(c) for c in nx.connected_components(h))
    assert sorted(members(c) for c in connected_components(g)) == comps
    assert (bipartition(g) is not None) == nx.is_bipartite(h)
    assert complement(g).to_networkx().edges() == nx.complement(h).edges()


@given(graphs())
def test_bipartition_invariants(g):
    bip = bipartition(g)
    if bip is None:
        return
    assert bip.x | bip.y == g.full and not bip.x & bip.y
    assert all(not g.adj[v] & bip.x for v in members(bip.x))
    assert all(not g.adj[v] & bip.y for v in members(bip.y))


@given(graphs())
def test_diameter_three_iff_far_pair(g):
    if diameter(g) == math.inf:
        return
    far = any(
        not g.has_edge(u, v) and not g.adj[u] & g.adj[v]
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )
    assert (diameter(g) >= 3) == far
    dist = distance_matrix(g)
    assert far == any(d >= 3 for row in dist for d in row)


@given(graph_and_set())
def test_is_clique_matches_pairs(gs):
    g, s = gs
    vs = members(s)
    assert is_clique(g, s) == all(g.has_edge(a, b) for a in vs for b in vs if a < b)


def test_vertex_set_members():
    assert members(vertex_set([3, 0, 5])) == [0, 3, 5]

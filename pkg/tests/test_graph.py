import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atomwidth.catalog import G, complete, cycle, edgeless, path
from atomwidth.corpus import graphs_up_to
from atomwidth.graph import (
    Graph,
    GraphError,
    complement,
    false_twin_pairs,
    from_graph6,
    induced_subgraph,
    is_anticomplete_to,
    is_clique,
    is_complete_to,
    is_connected,
    is_independent,
    is_matching_between,
    parse_edgelist,
    relabel,
    to_edgelist,
    to_graph6,
)

from conftest import random_graph


@st.composite
def graphs_st(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def test_false_twins_examples():
    assert false_twin_pairs(cycle(4)) == [(0, 2), (1, 3)]
    assert false_twin_pairs(path(4)) == []
    assert len(false_twin_pairs(G("K1_3"))) == 3


def test_set_predicates():
    k4 = complete(4)
    assert is_clique(k4, [0, 1, 2]) and not is_independent(k4, [0, 1])
    p4 = path(4)
    assert is_independent(p4, [0, 2]) and is_independent(p4, [0, 3])
    assert is_clique(p4, []) and is_independent(p4, [])
    c4 = cycle(4)
    assert is_complete_to(c4, [0, 2], [1, 3])
    assert is_anticomplete_to(p4, [0], [2, 3])
    assert is_matching_between(p4, [0, 2], [1, 3]) is False
    assert is_matching_between(G("2P2"), [0, 2], [1, 3])


def test_predicates_reject_bad_input():
    with pytest.raises(GraphError):
        is_clique(path(3), [5])
    with pytest.raises(GraphError):
        is_complete_to(path(3), [0, 1], [1, 2])


def test_constructor_validates():
    with pytest.raises(GraphError):
        Graph(2, (2, 0))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_null_graph_is_not_connected():
    assert not is_connected(Graph.empty(0))
    assert is_connected(Graph.empty(1))


def test_edgelist_round_trip_and_errors():
    g = G("bull")
    assert parse_edgelist(to_edgelist(g)) == g
    assert parse_edgelist("# comment\n3 1\n0 2  # edge\n") == Graph.from_edges(3, [(0, 2)])
    for bad in ["", "3\n", "3 2\n0 1\n", "3 1\n0 1 2\n", "3 2\n0 1\n1 0\n", "2 1\n0 0\n", "2 1\na b\n"]:
        with pytest.raises(GraphError):
            parse_edgelist(bad)


def test_graph6_against_networkx(rng):
    for n in list(range(0, 12)) + [63, 70]:
        g = random_graph(rng, n)
        text = to_graph6(g)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        ref = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert text == ref
        assert from_graph6(text) == g
        assert from_graph6(">>graph6<<" + text) == g


def test_graph6_rejects_garbage():
    for bad in ["", "D", "D?", "D???", "~", " \x01", "A`"]:
        with pytest.raises(GraphError):
            from_graph6(bad)


def test_complement_involution_exhaustive():
    for g in graphs_up_to("all", 7):
        c = complement(g)
        assert complement(c) == g
        assert c.m + g.m == g.n * (g.n - 1) // 2


@settings(max_examples=200, deadline=None)
@given(graphs_st(), st.randoms(use_true_random=False))
def test_relabel_and_induced(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    h = relabel(g, perm)
    inv = [0] * g.n
    for v, p in enumerate(perm):
        inv[p] = v
    assert relabel(h, inv) == g
    assert sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()) == h.edges()
    sub = [v for v in range(g.n) if r.random() < 0.5]
    s = induced_subgraph(g, sub)
    for a, b in itertools.combinations(range(len(sub)), 2):
        assert s.has_edge(a, b) == g.has_edge(sub[a], sub[b])


@settings(max_examples=200, deadline=None)
@given(graphs_st(max_n=14))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g
    assert parse_edgelist(to_edgelist(g)) == g


def test_catalog_basics():
    assert edgeless(3).m == 0 and complete(5).m == 10
    assert G("gem") == G("co(P1+P4)")

import itertools

import networkx as nx

from atomwidth.catalog import NAMED, G, complete, complete_bipartite, cycle, edgeless, path
from atomwidth.corpus import graphs_up_to
from atomwidth.graph import Graph, is_clique, is_independent
from atomwidth.oracles import brute_clique_cutset, brute_induced_embedding
from atomwidth.recognizers import (
    contains_induced,
    find_clique_cutset,
    has_dominating_vertex,
    has_nonadjacent_pair_complete_to_rest,
    in_class_coS,
    in_class_S,
    induced_cycle,
    is_atom,
    is_bipartite,
    is_bipartite_chain,
    is_chordal,
    is_clique_cutset,
    is_h_free,
    is_split,
    witness_or_none,
)

from conftest import random_graph

SMALL_PATTERNS = [G(name) for name in NAMED if G(name).n <= 5]


def _is_induced_copy(g, h, emb):
    assert len(set(emb)) == h.n
    return all(h.has_edge(a, b) == g.has_edge(emb[a], emb[b]) for a, b in itertools.combinations(range(h.n), 2))


def test_contains_induced_examples():
    assert contains_induced(cycle(5), path(4)) is not None
    assert contains_induced(G("K1_3"), complete(3)) is None
    assert contains_induced(G("paw"), complete(3)) is not None
    assert contains_induced(path(3), Graph.empty(0)) == ()


def test_contains_induced_against_brute_force(rng):
    for _ in range(400):
        g = random_graph(rng, rng.randint(1, 8))
        h = rng.choice(SMALL_PATTERNS)
        emb = contains_induced(g, h)
        ref = brute_induced_embedding(g, h)
        assert (emb is None) == (ref is None)
        if emb is not None:
            assert _is_induced_copy(g, h, emb)
        assert is_h_free(g, h) == (ref is None)


def test_witness_or_none_reports_first_hit():
    hit = witness_or_none(cycle(5), [G("2P2"), path(3)])
    assert hit is not None and hit[0] == path(3)
    assert _is_induced_copy(cycle(5), path(3), hit[1])
    assert witness_or_none(complete(4), [G("2P1")]) is None


def test_clique_cutset_examples():
    cut = find_clique_cutset(path(3))
    assert cut is not None and cut.vertices == (1,)
    for k in range(1, 7):
        assert find_clique_cutset(complete(k)) is None
    assert find_clique_cutset(G("2P1")).vertices == ()
    # a split graph with an independent vertex missing part of the clique
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 2)])
    assert is_split(g) is not None
    cut = find_clique_cutset(g)
    assert cut is not None and is_clique_cutset(g, cut.vertices)
    assert is_clique_cutset(g, g.neighbors(4))


def test_clique_cutset_against_brute_force(rng):
    for i in range(10000):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6, 0.8]))
        cut = find_clique_cutset(g)
        ref = brute_clique_cutset(g)
        assert (cut is None) == (ref is None), g
        if cut is not None:
            assert is_clique(g, cut.vertices) and is_clique_cutset(g, cut.vertices)


def test_atom_exhaustive_against_brute_force():
    for g in graphs_up_to("all", 7):
        assert is_atom(g) == (g.n >= 1 and brute_clique_cutset(g) is None and nx.is_connected(_nx(g)))


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_split_examples():
    diamond = G("diamond")
    assert is_split(diamond) is not None
    assert is_split(cycle(4)) is None
    k, i = is_split(G("P4"))
    assert is_clique(G("P4"), k) and is_independent(G("P4"), i)


def test_split_equals_forbidden_triple_exhaustive():
    triple = [cycle(4), cycle(5), G("2P2")]
    for g in graphs_up_to("all", 8):
        part = is_split(g)
        assert (part is not None) == is_h_free(g, triple)
        if part is not None:
            k, i = part
            assert is_clique(g, k) and is_independent(g, i) and sorted(k + i) == list(range(g.n))


def test_chordal_against_networkx(rng):
    assert not is_chordal(cycle(6))
    assert is_chordal(complete(5)) and is_chordal(path(6))
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 10))
        assert is_chordal(g) == nx.is_chordal(_nx(g))


def test_bipartite_against_networkx(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 10), 0.25)
        part = is_bipartite(g)
        assert (part is not None) == nx.is_bipartite(_nx(g))
        if part is not None:
            assert is_independent(g, part[0]) and is_independent(g, part[1])


def test_chain_examples():
    assert is_bipartite_chain(complete_bipartite(2, 3)) is not None
    assert is_bipartite_chain(path(4)) is not None
    assert is_bipartite_chain(G("2P2")) is None
    assert is_bipartite_chain(cycle(5)) is None


def test_chain_equals_bipartite_2p2_free_exhaustive():
    for g in graphs_up_to("all", 7):
        chain = is_bipartite_chain(g)
        assert (chain is not None) == (is_bipartite(g) is not None and is_h_free(g, G("2P2")))
        if chain is not None:
            for side in (chain.top, chain.bottom):
                for x, y in zip(side, side[1:]):
                    assert g.adj[y] & ~g.adj[x] == 0


def test_class_s_examples():
    assert in_class_S(path(5))
    assert in_class_S(G("S1_2_3"))
    assert not in_class_S(cycle(4))
    assert in_class_S(G("P1+S1_1_3")) and in_class_S(edgeless(4))
    assert not in_class_S(G("K1_4"))
    assert not in_class_S(G("K3"))
    assert in_class_coS(G("coP5")) and not in_class_coS(cycle(5))


def test_class_s_against_definition():
    # components are paths or trees with exactly one degree-3 vertex and max degree 3
    for g in graphs_up_to("all", 7):
        ok = True
        for comp in nx.connected_components(_nx(g)):
            sub = _nx(g).subgraph(comp)
            degs = [d for _, d in sub.degree()]
            if not nx.is_tree(sub) or max(degs) > 3 or degs.count(3) > 1:
                ok = False
        assert in_class_S(g) == ok


def test_dominating_and_pair_examples():
    assert has_dominating_vertex(G("gem"))
    assert has_nonadjacent_pair_complete_to_rest(cycle(4))
    assert not has_dominating_vertex(G("2P2"))
    assert not has_nonadjacent_pair_complete_to_rest(G("2P2"))


def test_induced_cycle():
    c = induced_cycle(cycle(5), 5)
    assert c is not None and len(c) == 5
    assert induced_cycle(complete(5), 4) is None
    assert induced_cycle(G("K3_3"), 4) is not None

import random
import time

import networkx as nx
import pytest

from atomwidth.canon import is_isomorphic
from atomwidth.catalog import G, complete, complete_bipartite, cycle, edgeless, path
from atomwidth.constructions import grid_certificate, lozin_volz_certificate, lozin_volz_full
from atomwidth.corpus import graphs, graphs_up_to
from atomwidth.cwd import (
    BudgetExceeded,
    CertificateError,
    CreateVertex,
    ExpressionError,
    Join,
    Relabel,
    Union,
    WidthCertificate,
    bound_after_transcript,
    build_bipartite_chain,
    build_cograph,
    build_complete,
    build_edgeless,
    check_certificate,
    cwd_expression_at_most,
    eval_graph,
    evaluate,
    exact_cliquewidth,
    parse_sexpr,
    to_sexpr,
    width,
)
from atomwidth.graph import Graph, GraphError, relabel
from atomwidth.oracles import brute_canonical, graphs_of_width_at_most
from atomwidth.recognizers import is_bipartite_chain, is_h_free
from atomwidth.suites import random_bipartite

from certificates import EXPECTED_WITNESS, injected_certificates
from conftest import random_graph

P4 = path(4)


# expressions ---------------------------------------------------------------


def test_eval_examples():
    e = CreateVertex(1)
    assert eval_graph(e) == Graph.empty(1) and width(e) == 1
    e = Join(1, 2, Union(CreateVertex(1), CreateVertex(2)))
    assert eval_graph(e) == path(2) and width(e) == 2
    k4 = build_complete(4)
    assert eval_graph(k4) == complete(4) and width(k4) == 2


def test_join_needs_distinct_labels():
    with pytest.raises(ExpressionError):
        Join(1, 1, CreateVertex(1))
    e = Relabel(1, 1, CreateVertex(1))
    assert eval_graph(e) == Graph.empty(1)


def test_eval_numbers_vertices_in_creation_order():
    e = Union(Join(1, 2, Union(CreateVertex(1), CreateVertex(2))), CreateVertex(1))
    lg = evaluate(e)
    assert lg.graph == Graph.from_edges(3, [(0, 1)])
    assert lg.labels == (1, 2, 1)


def test_sexpr_round_trip():
    text = "(relabel 2 1 (join 1 2 (union (v 1) (v 2))))"
    e = parse_sexpr(text)
    assert to_sexpr(e) == text
    assert eval_graph(e) == path(2)
    for g in graphs_up_to("all", 5):
        f = cwd_expression_at_most(g, 3)
        assert parse_sexpr(to_sexpr(f)) == f


@pytest.mark.parametrize(
    "bad",
    ["", "(v)", "(v 0)", "(v 1", "(v 1))", "(union (v 1))", "(join 1 1 (v 1))", "(frob 1)", "v 1", "(v 1) (v 2)", "(v x)"],
)
def test_sexpr_errors(bad):
    with pytest.raises(ExpressionError):
        parse_sexpr(bad)


# builders ------------------------------------------------------------------


def test_builder_examples():
    e = build_edgeless(5)
    assert width(e) == 1 and eval_graph(e) == edgeless(5)
    e = build_complete(6)
    assert width(e) == 2 and eval_graph(e) == complete(6)
    k23 = complete_bipartite(2, 3)
    e = build_bipartite_chain(k23)
    assert width(e) <= 3 and is_isomorphic(eval_graph(e), k23)


def test_builder_preconditions():
    with pytest.raises(GraphError):
        build_cograph(P4)
    with pytest.raises(GraphError):
        build_bipartite_chain(G("2P2"))
    with pytest.raises(GraphError):
        build_edgeless(0)


def test_cograph_builder_on_random_cographs():
    rng = random.Random(7)
    made = 0
    while made < 1000:
        g = _random_cograph(rng, rng.randint(1, 14))
        assert is_h_free(g, P4)
        e = build_cograph(g)
        assert width(e) <= 2 and is_isomorphic(eval_graph(e), g)
        made += 1


def _random_cograph(rng, n):
    if n == 1:
        return Graph.empty(1)
    k = rng.randint(1, n - 1)
    a, b = _random_cograph(rng, k), _random_cograph(rng, n - k)
    rows = list(a.adj) + [r << a.n for r in b.adj]
    if rng.random() < 0.5:
        for u in range(a.n):
            for v in range(a.n, n):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    g = Graph(n, tuple(rows))
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(g, perm)


def test_chain_builder_on_random_chain_graphs():
    rng = random.Random(11)
    seen = 0
    while seen < 1000:
        g, _, _ = random_bipartite(rng, 14)
        if is_bipartite_chain(g) is None:
            continue
        e = build_bipartite_chain(g)
        assert width(e) <= 3 and is_isomorphic(eval_graph(e), g)
        seen += 1


def test_complete_and_edgeless_builders_all_sizes():
    for k in range(1, 15):
        assert eval_graph(build_complete(k)) == complete(k) and width(build_complete(k)) == min(k, 2)
        assert eval_graph(build_edgeless(k)) == edgeless(k) and width(build_edgeless(k)) == 1


# exact solver --------------------------------------------------------------


def test_solver_examples():
    assert exact_cliquewidth(edgeless(4)) == 1
    assert exact_cliquewidth(complete(5)) == 2
    assert exact_cliquewidth(P4) == 3
    assert exact_cliquewidth(cycle(5)) == 3
    assert exact_cliquewidth(Graph.empty(0)) == 0


def test_solver_budget():
    with pytest.raises(BudgetExceeded):
        exact_cliquewidth(P4, budget=2)


def test_solver_agrees_with_expression_closure():
    # graphs reachable by closing single vertices under the four operations
    for k, max_n in ((2, 6), (3, 5)):
        closure = graphs_of_width_at_most(k, max_n)
        for n in range(1, max_n + 1):
            for g in graphs("all", n):
                assert _fits(g, k) == (brute_canonical(g) in closure[n])


def _fits(g, k):
    return cwd_expression_at_most(g, k) is not None


def test_solver_analytic_facts():
    for g in graphs_up_to("all", 6):
        k = exact_cliquewidth(g)
        assert (k == 1) == (g.m == 0)
        assert (k <= 2) == is_h_free(g, P4)


def test_solver_witness_is_valid(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 8))
        k = exact_cliquewidth(g)
        e = cwd_expression_at_most(g, k)
        assert width(e) <= k and is_isomorphic(eval_graph(e), g)
        if k > 1:
            assert cwd_expression_at_most(g, k - 1) is None


def test_solver_not_above_builders():
    for g in graphs_up_to("all", 8):
        if g.n > 7 and g.m % 7:
            continue
        if is_bipartite_chain(g) is not None:
            assert exact_cliquewidth(g) <= width(build_bipartite_chain(g))


def test_bound_after_transcript_is_symbolic():
    rec = bound_after_transcript(3, {"DeleteVertex": 2, "BipartiteComplement": 1})
    assert rec["residual_width"] == 3 and rec["deletions"] == 2
    assert rec["bipartite_complementations"] == 1 and rec["numeric_bound"] is None


# certificates --------------------------------------------------------------


def _literal_check(g, cert):
    """Properties as a set of violated indices, written directly from their statements."""
    n, m = cert.n, cert.m
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    cell = {}
    for key, vs in cert.partition.items():
        for v in vs:
            cell[v] = key
    V = lambda i, j: set(cert.partition.get((i, j), ()))
    bad = set()
    if any(len(V(i, 0)) > 1 for i in range(1, n + 1)):
        bad.add(1)
    if any(len(V(0, j)) > 1 for j in range(1, n + 1)):
        bad.add(2)
    if any(not V(i, j) for i in range(1, n + 1) for j in range(1, n + 1)):
        bad.add(3)
    for i in range(1, n + 1):
        row = set().union(*(V(i, j) for j in range(0, n + 1)))
        if not row or not nx.is_connected(h.subgraph(row)):
            bad.add(4)
    for j in range(1, n + 1):
        col = set().union(*(V(i, j) for i in range(0, n + 1)))
        if not col or not nx.is_connected(h.subgraph(col)):
            bad.add(5)
    for u, v in h.edges():
        for a, b in ((u, v), (v, u)):
            (k, l), (i, j) = cell[a], cell[b]
            if l == 0 and k >= 1 and i >= 1 and j >= 1 and i > k:
                bad.add(6)
            if k == 0 and l >= 1 and i >= 1 and j >= 1 and j > l:
                bad.add(7)
            if min(k, l, i, j) >= 1 and (abs(i - k) > m or abs(j - l) > m):
                bad.add(8)
    return bad


def test_grid_certificate_bound():
    g, cert = grid_certificate(5)
    start = time.perf_counter()
    r = check_certificate(g, cert)
    assert r.ok and r.bound == 3
    assert time.perf_counter() - start < 1.0
    assert _literal_check(g, cert) == set()


def test_each_property_violation_is_reported_alone():
    for prop, (g, cert) in injected_certificates().items():
        r = check_certificate(g, cert)
        assert not r.ok
        assert {v.prop for v in r.violations} == {prop}, prop
        assert _literal_check(g, cert) == {prop}


def test_violation_witnesses():
    for prop, (g, cert) in injected_certificates().items():
        (v,) = check_certificate(g, cert).violations
        assert (v.prop, v.witness) == (prop, EXPECTED_WITNESS[prop])


def test_checker_matches_literal_reading_on_random_partitions(rng):
    for _ in range(300):
        n = rng.randint(2, 4)
        m = rng.randint(0, n - 2)
        cells = [(i, j) for i in range(n + 1) for j in range(n + 1) if (i, j) != (0, 0)]
        verts = rng.randint(n * n, n * n + 2 * n)
        g = random_graph(rng, verts, rng.choice([0.1, 0.2, 0.4]))
        part: dict = {}
        order = list(range(verts))
        rng.shuffle(order)
        interior = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        for c, v in zip(interior, order):
            part[c] = (v,)
        for v in order[len(interior):]:
            c = rng.choice(cells)
            part[c] = part.get(c, ()) + (v,)
        if rng.random() < 0.2:
            c = rng.choice(interior)
            moved = part.pop(c)
            c2 = rng.choice(cells)
            part[c2] = part.get(c2, ()) + moved
        cert = WidthCertificate(m, n, part)
        got = {v.prop for v in check_certificate(g, cert).violations}
        assert got == _literal_check(g, cert)


def test_certificate_input_errors():
    g, cert = grid_certificate(3)
    with pytest.raises(CertificateError):
        check_certificate(g, WidthCertificate(1, 2, cert.partition))
    with pytest.raises(CertificateError):
        check_certificate(g, WidthCertificate(1, 3, {k: v for k, v in cert.partition.items() if k != (1, 1)}))
    dup = dict(cert.partition)
    dup[(1, 0)] = cert.partition[(1, 1)]
    with pytest.raises(CertificateError):
        check_certificate(g, WidthCertificate(1, 3, dup))


def test_lozin_volz_partition():
    for n in (4, 5):
        g = lozin_volz_full(n)
        r = check_certificate(g, lozin_volz_certificate(n))
        assert r.ok and r.bound == n
        assert _literal_check(g, lozin_volz_certificate(n)) == set()

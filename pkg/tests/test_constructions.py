import pytest

from atomwidth.catalog import G, complete, cycle
from atomwidth.constructions import (
    CONSTRUCTIONS,
    build,
    chain_over_split,
    colored_wall,
    diamond_p2p4_apex,
    grid,
    grid3color,
    line_graph_wall,
    lozin_volz,
    need_s_cos_pair,
    q_of_grid,
    subwall_coA_apex,
    verify_claims,
    wall,
    wall7_cliques,
    wall_coA_two_apex,
    wall_colours,
)
from atomwidth.graph import GraphError
from atomwidth.recognizers import contains_induced, is_atom, is_bipartite, is_h_free

# instances cheap enough for the unit tests; the acceptance suite runs all of them
FAST = [(cid, p) for cid, c in CONSTRUCTIONS.items() for p in c.params if build(cid, p).n <= 70]


def test_wall_counts():
    w2 = wall(2)
    assert (w2.n, w2.m) == (16, 19)
    w3 = wall(3)
    assert (w3.n, w3.m) == (30, 38)
    for w, h in ((w2, 2), (w3, 3)):
        assert is_bipartite(w) is not None and is_atom(w)
        assert {w.degree(v) for v in range(w.n)} == {2, 3}
        # one independent cycle per brick
        assert w.m - w.n + 1 == h * h
    with pytest.raises(GraphError):
        wall(1)


def test_wall_embeds_in_next_wall():
    assert contains_induced(wall(3), wall(2)) is not None
    assert contains_induced(grid(4), grid(3)) is not None


def test_generators_are_deterministic():
    for cid, p in FAST:
        assert build(cid, p).edges() == build(cid, p).edges()


def test_need_s_cos_pair_examples():
    w, cw = need_s_cos_pair(cycle(4), G("C6"))
    assert w.n == 16 + 19 * 6
    assert is_h_free(w, [cycle(4), G("C6")]) and is_atom(w)
    w, cw = need_s_cos_pair(complete(4), cycle(5))
    assert is_h_free(w, complete(4)) and is_h_free(w, complete(3))
    w, cw = need_s_cos_pair(cycle(5), cycle(5))
    assert is_h_free(w, cycle(5)) and is_atom(w)
    with pytest.raises(GraphError):
        need_s_cos_pair(G("P4"), G("P4"))


def test_family_sizes():
    assert line_graph_wall(2).n == 19
    assert lozin_volz(3).n == 2 * 3 * 4 - 2
    assert wall7_cliques(2).n == 16 + 19 + 3 * 38
    assert grid3color(7).n == 49
    assert q_of_grid(2).n == 16
    assert subwall_coA_apex(2).n == 16 + 19 + 1
    assert wall_coA_two_apex(2).n == 18
    assert diamond_p2p4_apex(2).n == 16 + 19 + 1
    assert chain_over_split(2).n == 9


def test_wall_colouring():
    h = 5
    w = wall(h)
    col = wall_colours(h)
    for v in range(w.n):
        seen = [col[u] for u in w.neighbors(v)]
        assert col[v] not in seen
        assert len(seen) == len(set(seen))
    # second row reads 3,4,1,2,... from the left of the mirrored layout
    from atomwidth.constructions import wall_layout

    row1 = sorted((2 * h + 1 - x, c) for (x, y), c in zip(wall_layout(h), col) if y == 1)
    assert [c for _, c in row1][:6] == [3, 4, 1, 2, 3, 4]
    g = colored_wall(2)
    assert is_h_free(g, [G("diamond"), G("5P1")])


@pytest.mark.parametrize("cid,p", FAST)
def test_claims_hold(cid, p):
    report = verify_claims(cid, p)
    assert report["ok"], report


def test_unclaimed_atoms_are_marked():
    unclaimed = {cid for cid, c in CONSTRUCTIONS.items() if c.claimed_atom is None}
    assert unclaimed == {"wall7_cliques_co", "cochordal_K4free", "q_of_grid"}
    # the doubled variants are the claimed atoms
    assert not is_atom(build("cochordal_K4free", 3))
    assert is_atom(build("cochordal_K4free_twin", 3))


def test_grid3color_small_parameters_are_generated_without_atom_claim():
    c = CONSTRUCTIONS["grid3color"]
    assert c.atom_claimed_at(5) is None and c.atom_claimed_at(7) is True
    assert grid3color(3).n == 9


def test_unknown_construction():
    with pytest.raises(GraphError):
        build("nope", 2)

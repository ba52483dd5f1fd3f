import json

import pytest

from atomwidth.catalog import G
from atomwidth.classify import (
    ATOMS_OPEN,
    ATOMS_TABLE,
    GENERAL_OPEN,
    ClassPair,
    Outcome,
    all_clause_ids,
    classify,
    classify_atoms,
    classify_atoms_alt,
    classify_general,
    equivalence_closure,
    normalize,
    open_pairs,
)
from atomwidth.constructions import CONSTRUCTIONS, build, need_s_cos_pair
from atomwidth.recognizers import is_atom, is_h_free

META_GENERATORS = {"twin_double", "add_apex_pair", "need_s_cos_pair"}


def pair(a, b):
    return ClassPair.of(G(a), G(b))


def test_closure_example():
    got = equivalence_closure(pair("3P1", "K4"))
    assert got == {pair("3P1", "K4"), pair("P1+P3", "K4"), pair("K3", "4P1"), pair("coP1+P3", "4P1")}
    assert equivalence_closure(pair("P4", "P4")) == {pair("P4", "P4")}
    assert equivalence_closure(pair("2P2", "coP2+P3")) == {pair("2P2", "coP2+P3"), pair("C4", "P2+P3")}
    for p in (pair("3P1", "K4"), pair("gem", "P6"), pair("C4", "P5")):
        assert len(equivalence_closure(p)) <= 8


def test_normalize_examples():
    assert normalize(pair("P1+P3", "P5")) == pair("3P1", "P5")
    assert normalize(pair("coP1+P3", "P5")) == pair("K3", "P5")
    assert normalize(pair("paw", "P5")) == pair("K3", "P5")
    assert normalize(pair("3P1", "coS1_2_3")) == pair("K3", "S1_2_3")


@pytest.mark.parametrize(
    "h1,h2,outcome,clause",
    [
        ("2P2", "coP2+P3", "Bounded", "T3.1(xii)"),
        ("K3", "2P3", "Unbounded", "T3.2(vii)"),
        ("diamond", "P6", "Open", "OP2(i)"),
        ("C4", "P5", "Bounded", "T3.1(xi)"),
        ("coC4", "coP5", "Unbounded", "T3.2(xiii)"),
        ("P4", "K1_3+3P1", "Bounded", "T3.1(i)"),
        ("K5", "6P1", "Bounded", "T3.1(ii)"),
        ("C5", "C6", "Unbounded", "T3.2(i)"),
    ],
)
def test_atoms_examples(h1, h2, outcome, clause):
    v = classify_atoms(G(h1), G(h2))
    assert (v.outcome.value, v.clause) == (outcome, clause)
    assert v.clause in all_clause_ids()
    w = classify_atoms(G(h2), G(h1))
    assert (w.outcome, w.clause) == (v.outcome, v.clause)


def test_unbounded_atoms_name_generators():
    assert classify_atoms(G("K3"), G("2P3")).construction == "lozin_volz"
    assert classify_atoms(G("K3"), G("3P2")).construction == "bipcomp_subdivided_wall"
    assert classify_atoms(G("coC4"), G("coP5")).construction == "wall_coA_two_apex"
    assert classify_atoms(G("C5"), G("C6")).construction == "need_s_cos_pair"


@pytest.mark.parametrize(
    "h1,h2,outcome,clause",
    [
        ("K3", "S1_2_3", "Open", "OP1(i)"),
        ("2P2", "coP2+P3", "Unbounded", "T4.2(iii)"),
        ("bull", "P4", "Bounded", "T4.1(i)"),
        ("C5", "P4", "Bounded", "T4.1(i)"),
    ],
)
def test_general_examples(h1, h2, outcome, clause):
    v = classify_general(G(h1), G(h2))
    assert (v.outcome.value, v.clause) == (outcome, clause)


def test_raw_pair_is_kept_for_display():
    v = classify_atoms(G("P1+P3"), G("K4"))
    assert (v.h1, v.h2) == ("P1+P3", "K4")
    assert set(v.normalized) == {"3P1", "K4"}


def test_dispatch_and_json():
    v = classify(G("diamond"), G("P6"), "atoms")
    data = json.loads(json.dumps(v.to_json()))
    assert data["outcome"] == "Open" and data["clause"] == "OP2(i)" and data["scope"] == "atoms"
    assert classify(G("K3"), G("S1_2_3"), "general").clause == "OP1(i)"
    with pytest.raises(ValueError):
        classify(G("K3"), G("P4"), "nope")


def test_alt_table_agrees_on_table_graphs():
    names = ["P4", "K3", "2P2", "C4", "P6", "diamond", "gem", "paw", "coP2+P3", "P1+P4", "K1_3", "4P1", "3P2", "P2+P3"]
    for a in names:
        for b in names:
            assert classify_atoms(G(a), G(b)).outcome is classify_atoms_alt(G(a), G(b)).outcome


def test_every_open_case_classifies_open():
    for table, fn in ((ATOMS_OPEN, classify_atoms), (GENERAL_OPEN, classify_general)):
        for cid, x, ys in table:
            for y in ys:
                v = fn(G(x), G(y))
                assert v.outcome is Outcome.OPEN and v.clause == cid
    assert len(open_pairs()) == 18


def _representatives(clause):
    """(H1 name, H2 name, generator) for every alternative pair of a ``sup`` clause."""
    out = []
    for x in clause.left:
        for y in clause.right:
            out.append((x, y, clause.generator(x, y)))
    return out


def test_generators_avoid_both_graphs():
    checked = 0
    for clause in ATOMS_TABLE:
        if clause.outcome is not Outcome.UNBOUNDED or clause.kind != "sup":
            continue
        for x, y, gen in _representatives(clause):
            assert gen is not None, (clause.id, x, y)
            if gen in META_GENERATORS:
                continue
            c = CONSTRUCTIONS[gen]
            p = c.params[0]
            g = build(gen, p)
            assert is_h_free(g, [G(x), G(y)]), (clause.id, x, y, gen)
            if c.atom_claimed_at(p):
                assert is_atom(g)
            checked += 1
    assert checked >= 30


def test_need_s_cos_pair_serves_both_s_clauses():
    w, _ = need_s_cos_pair(G("C4"), G("K1_4"))
    assert is_atom(w) and is_h_free(w, [G("C4"), G("K1_4")])
    _, cw = need_s_cos_pair(G("C5"), G("coK1_4"))
    assert is_atom(cw) and is_h_free(cw, [G("C5"), G("coK1_4")])


def test_clause_ids_are_unique():
    ids = [c.id for c in ATOMS_TABLE]
    assert len(ids) == len(set(ids)) == 25

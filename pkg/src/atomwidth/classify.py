"""Bounded / unbounded / open classification of (H1, H2)-free classes.

Two scopes are supported: atoms of the class, and the whole class.  The
clause tables below are plain data; each clause is one of

* ``sub``: H1 is an induced subgraph of one graph in ``left`` and H2 of one
  in ``right`` (an empty ``right`` puts no condition on H2);
* ``sup``: H1 contains one graph in ``left`` and H2 one in ``right``;
* ``ramsey``: one graph is complete and the other edgeless;
* ``notS`` / ``notcoS``: neither graph (complement) lies in the class S of
  linear forests of paths and subdivided claws;
* ``within``: the class is contained in the (left[0], right[0])-free graphs;
* ``contains``: the class contains the (A, B)-free graphs for some A in
  ``left`` and B in ``right``.

Pairs are unordered; every clause is tried in both orders.  The atoms table
is matched against the pair as given (complementing is not a symmetry for
atoms), the general table against its whole equivalence closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable

from .canon import canonical_code, canonical_graph
from .catalog import G
from .graph import Graph, complement, to_graph6
from .recognizers import contains_induced, in_class_S


class Outcome(str, Enum):
    BOUNDED = "Bounded"
    UNBOUNDED = "Unbounded"
    OPEN = "Open"


class Scope(str, Enum):
    ATOMS = "atoms"
    GENERAL = "general"


class ClassificationGap(Exception):
    """No clause and no open case matched, or clauses of both outcomes did."""


@dataclass(frozen=True)
class Clause:
    id: str
    outcome: Outcome
    kind: str
    left: tuple[str, ...] = ()
    right: tuple[str, ...] = ()
    # (left name, right name) -> generator id; "*" matches any name
    generators: tuple[tuple[str, str, str], ...] = ()
    closure: bool = False

    def generator(self, a: str | None, b: str | None) -> str | None:
        for x, y, gen in self.generators:
            if x in ("*", a) and y in ("*", b):
                return gen
        return None

    def text(self) -> str:
        if self.kind == "ramsey":
            return "H1 = K_s and H2 = tP1"
        if self.kind == "notS":
            return "H1 not in S and H2 not in S"
        if self.kind == "notcoS":
            return "H1 not in co-S and H2 not in co-S"
        if self.kind == "within":
            return f"class within ({self.left[0]}, {self.right[0]})-free graphs"
        if self.kind == "contains":
            return f"class contains (A, B)-free graphs, A in {{{', '.join(self.left)}}}, B in {{{', '.join(self.right)}}}"
        rel = "⊆i" if self.kind == "sub" else "⊇i"
        lhs = f"H1 {rel} {' or '.join(self.left)}"
        if not self.right:
            return f"H1 or H2 {rel} {' or '.join(self.left)}"
        return f"{lhs} and H2 {rel} {' or '.join(self.right)}"


def _c(cid: str, outcome: str, kind: str, left: Iterable[str] = (), right: Iterable[str] = (), gens=(), closure=False) -> Clause:
    return Clause(cid, Outcome(outcome), kind, tuple(left), tuple(right), tuple(gens), closure)


_B, _U = "Bounded", "Unbounded"

_PAW_LIST = ("K1_3+3P1", "K1_3+P2", "P1+P2+P3", "P1+P5", "P1+S1_1_2", "P2+P4", "P6", "S1_1_3", "S1_2_2")
_DIAMOND_LIST = ("P1+2P2", "3P1+P2", "P2+P3")
_K3_LIST = ("2P1+2P2", "2P1+P4", "4P1+P2", "3P2", "2P3")


def _co(names: Iterable[str]) -> tuple[str, ...]:
    return tuple("co" + n for n in names)


ATOMS_TABLE: tuple[Clause, ...] = (
    _c("T3.1(i)", _B, "sub", ["P4"]),
    _c("T3.1(ii)", _B, "ramsey"),
    _c("T3.1(iii)", _B, "sub", ["paw"], _PAW_LIST),
    _c("T3.1(iv)", _B, "sub", ["P1+P3"], _co(_PAW_LIST)),
    _c("T3.1(v)", _B, "sub", ["diamond"], _DIAMOND_LIST),
    _c("T3.1(vi)", _B, "sub", ["2P1+P2"], _co(_DIAMOND_LIST)),
    _c("T3.1(vii)", _B, "sub", ["gem"], ["P1+P4", "P5"]),
    _c("T3.1(viii)", _B, "sub", ["P1+P4"], ["coP5"]),
    _c("T3.1(ix)", _B, "sub", ["K3+P1"], ["K1_3"]),
    _c("T3.1(x)", _B, "sub", ["co2P1+P3"], ["2P1+P3"]),
    _c("T3.1(xi)", _B, "sub", ["P6"], ["C4"]),
    _c("T3.1(xii)", _B, "sub", ["2P2"], ["coP2+P3"]),
    _c("T3.2(i)", _U, "notS", gens=[("*", "*", "need_s_cos_pair")]),
    _c("T3.2(ii)", _U, "notcoS", gens=[("*", "*", "need_s_cos_pair")]),
    _c("T3.2(iii)", _U, "sup", ["K3+P1"], ["4P1", "2P2"], [("*", "*", "apexed_co_bell")]),
    _c("T3.2(iv)", _U, "sup", ["K1_3"], ["K4", "C4"], [("*", "*", "line_graph_wall")]),
    _c(
        "T3.2(v)", _U, "sup", ["diamond"], ["K1_3", "5P1", "P2+P4", "P1+P6"],
        [("*", "K1_3", "line_graph_wall"), ("*", "5P1", "colored_wall"), ("*", "*", "diamond_p2p4_apex")],
    ),
    _c(
        "T3.2(vi)", _U, "sup", ["2P1+P2"], ["K3+P1", "K5", "coP2+P4", "coP6"],
        [
            ("*", "K3+P1", "apexed_co_bell"), ("*", "K5", "colored_wall_co"),
            ("*", "coP2+P4", "diamond_p2p4_apex_co"), ("*", "coP6", "add_apex_pair"),
        ],
    ),
    _c("T3.2(vii)", _U, "sup", ["K3"], _K3_LIST, [("*", "2P3", "lozin_volz"), ("*", "*", "bipcomp_subdivided_wall")]),
    _c(
        "T3.2(viii)", _U, "sup", ["3P1"], _co(_K3_LIST),
        [("*", "co2P3", "apexed_co_lozin"), ("*", "*", "bipcomp_subdivided_wall_co")],
    ),
    _c(
        "T3.2(ix)", _U, "sup", ["K4"], ["P1+P4", "3P1+P2", "2P2"],
        [("*", "P1+P4", "wall7_cliques_co_twin"), ("*", "3P1+P2", "grid3color_co"), ("*", "2P2", "cochordal_K4free_twin")],
    ),
    _c(
        "T3.2(x)", _U, "sup", ["4P1"], ["gem", "co3P1+P2", "C4"],
        [("*", "gem", "wall7_cliques"), ("*", "co3P1+P2", "grid3color"), ("*", "C4", "chordal_J")],
    ),
    _c(
        "T3.2(xi)", _U, "sup", ["gem", "coP1+2P2", "coP2+P3"], ["P1+2P2", "P6"],
        [("gem", "P1+2P2", "q_of_grid_twin"), ("gem", "P6", "twin_double"), ("*", "*", "subwall_coA_apex")],
    ),
    _c("T3.2(xii)", _U, "sup", ["P1+P4"], ["coP1+2P2"], [("*", "*", "q_of_grid_co")]),
    _c(
        "T3.2(xiii)", _U, "sup", ["2P2"], ["coP2+P4", "co3P2", "coP5"],
        [("*", "coP2+P4", "chain_over_split"), ("*", "*", "wall_coA_two_apex")],
    ),
)

GENERAL_TABLE: tuple[Clause, ...] = (
    _c("T4.1(i)", _B, "sub", ["P4"]),
    _c("T4.1(ii)", _B, "ramsey"),
    _c("T4.1(iii)", _B, "sub", ["paw"], _PAW_LIST),
    _c("T4.1(iv)", _B, "sub", ["diamond"], _DIAMOND_LIST),
    _c("T4.1(v)", _B, "sub", ["gem"], ["P1+P4", "P5"]),
    _c("T4.1(vi)", _B, "sub", ["K3+P1"], ["K1_3"]),
    _c("T4.1(vii)", _B, "sub", ["co2P1+P3"], ["2P1+P3"]),
    _c("T4.2(i)", _U, "notS"),
    _c("T4.2(ii)", _U, "notcoS"),
    _c("T4.2(iii)", _U, "sup", ["K3+P1", "C4"], ["4P1", "2P2"]),
    _c("T4.2(iv)", _U, "sup", ["diamond"], ["K1_3", "5P1", "P2+P4", "P6"]),
    _c("T4.2(v)", _U, "sup", ["K3"], _K3_LIST),
    _c("T4.2(vi)", _U, "sup", ["K4"], ["P1+P4", "3P1+P2"]),
    _c("T4.2(vii)", _U, "sup", ["gem"], ["P1+2P2"]),
)

# Reformulated atoms table, used only as an independent cross-check: the
# general-graph clauses under equivalence, plus containment conditions.
ATOMS_ALT_TABLE: tuple[Clause, ...] = tuple(
    Clause("T5.1" + c.id[4:], c.outcome, c.kind, c.left, c.right, closure=True)
    for c in GENERAL_TABLE
    if c.outcome is Outcome.BOUNDED
) + (
    _c("T5.2(i)", _B, "within", ["P6"], ["C4"]),
    _c("T5.2(ii)", _B, "within", ["2P2"], ["coP2+P3"]),
    _c("T5.3(i)", _U, "notS", closure=True),
    _c("T5.3(ii)", _U, "notcoS", closure=True),
    _c("T5.3(iii)", _U, "sup", ["K3+P1"], ["4P1", "2P2"], closure=True),
    _c("T5.3(iv)", _U, "sup", ["diamond"], ["K1_3", "5P1", "P2+P4"], closure=True),
    _c("T5.3(v)", _U, "sup", ["K3"], _K3_LIST, closure=True),
    _c("T5.3(vi)", _U, "sup", ["K4"], ["P1+P4", "3P1+P2", "2P2"], closure=True),
    _c("T5.3(vii)", _U, "sup", ["gem"], ["P1+2P2"], closure=True),
    _c("T5.4(i)", _U, "contains", ["diamond"], ["P1+P6"]),
    _c("T5.4(ii)", _U, "contains", ["2P1+P2"], ["coP6"]),
    _c("T5.4(iii)", _U, "contains", ["gem"], ["P6"]),
    _c("T5.4(iv)", _U, "contains", ["P1+2P2", "P6"], ["coP1+2P2", "coP2+P3"]),
    _c("T5.4(v)", _U, "contains", ["2P2"], ["coP2+P4", "co3P2", "coP5"]),
)

# Open cases: (id, H1, H2 alternatives)
ATOMS_OPEN: tuple[tuple[str, str, tuple[str, ...]], ...] = (
    ("OP2(i)", "diamond", ("P6",)),
    ("OP2(ii)", "C4", ("P1+2P2", "P2+P4", "3P2")),
    ("OP2(iii)", "coP1+2P2", ("2P2", "P2+P3", "P5")),
    ("OP2(iv)", "coP2+P3", ("P2+P3", "P5")),
    ("OP2(v)", "K3", ("P1+S1_1_3", "S1_2_3")),
    ("OP2(vi)", "3P1", ("coP1+S1_1_3",)),
    ("OP2(vii)", "diamond", ("P1+P2+P3", "P1+P5")),
    ("OP2(viii)", "2P1+P2", ("coP1+P2+P3", "coP1+P5")),
    ("OP2(ix)", "gem", ("P2+P3",)),
    ("OP2(x)", "P1+P4", ("coP2+P3",)),
)

GENERAL_OPEN: tuple[tuple[str, str, tuple[str, ...]], ...] = (
    ("OP1(i)", "K3", ("P1+S1_1_3", "S1_2_3")),
    ("OP1(ii)", "diamond", ("P1+P2+P3", "P1+P5")),
    ("OP1(iii)", "gem", ("P2+P3",)),
)


# pairs -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _canon(g: Graph) -> Graph:
    return canonical_graph(Graph(g.n, g.adj))


@lru_cache(maxsize=None)
def _named(name: str) -> Graph:
    return _canon(G(name))


def _key(g: Graph) -> tuple:
    return canonical_code(g)


@dataclass(frozen=True)
class ClassPair:
    """An unordered pair of graphs, stored in canonical form."""

    h1: Graph
    h2: Graph

    @classmethod
    def of(cls, h1: Graph, h2: Graph) -> "ClassPair":
        a, b = _canon(h1), _canon(h2)
        if _key(b) < _key(a):
            a, b = b, a
        return cls(a, b)

    def orders(self) -> tuple[tuple[Graph, Graph], ...]:
        return ((self.h1, self.h2), (self.h2, self.h1))

    def complemented(self) -> "ClassPair":
        return ClassPair.of(complement(self.h1), complement(self.h2))


def _iso(g: Graph, name: str) -> bool:
    return _canon(g) == _named(name)


@lru_cache(maxsize=None)
def _induced_in(small: Graph, big: Graph) -> bool:
    if small.n > big.n or small.m > big.m:
        return False
    return contains_induced(big, small) is not None


def is_induced_subgraph(small: Graph, big: Graph) -> bool:
    return _induced_in(_canon(small), _canon(big))


def normalize(p: ClassPair) -> ClassPair:
    """Replace co(P1+P3) by K3 and P1+P3 by 3P1; map {3P1, coS1_2_3} to {K3, S1_2_3}."""

    def one(h: Graph) -> Graph:
        if _iso(h, "coP1+P3"):
            return _named("K3")
        if _iso(h, "P1+P3"):
            return _named("3P1")
        return h

    q = ClassPair.of(one(p.h1), one(p.h2))
    if q == ClassPair.of(_named("3P1"), _named("coS1_2_3")):
        q = ClassPair.of(_named("K3"), _named("S1_2_3"))
    return q


def equivalence_closure(p: ClassPair) -> set[ClassPair]:
    """Closure under complementing both graphs and swapping 3P1 with P1+P3."""
    three, p1p3 = _named("3P1"), _named("P1+P3")
    swap = {three: p1p3, p1p3: three}
    seen = {p}
    todo = [p]
    while todo:
        q = todo.pop()
        nxt = [q.complemented()]
        for a, b in q.orders():
            if a in swap:
                nxt.append(ClassPair.of(swap[a], b))
        for r in nxt:
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return seen


# matching ------------------------------------------------------------------


def _is_complete(h: Graph) -> bool:
    return h.m == h.n * (h.n - 1) // 2


def _match_ordered(c: Clause, a: Graph, b: Graph) -> tuple[str | None, str | None] | None:
    """Names of the alternatives satisfied by ``(H1, H2) = (a, b)``, or ``None``."""
    if c.kind == "ramsey":
        return ("", "") if _is_complete(a) and b.m == 0 else None
    if c.kind == "notS":
        return ("", "") if not in_class_S(a) and not in_class_S(b) else None
    if c.kind == "notcoS":
        return ("", "") if not in_class_S(complement(a)) and not in_class_S(complement(b)) else None
    if c.kind == "within":
        # every forbidden graph of the bigger class contains H1 or H2
        ok = all(is_induced_subgraph(a, _named(x)) or is_induced_subgraph(b, _named(x)) for x in (c.left[0], c.right[0]))
        return (c.left[0], c.right[0]) if ok else None
    if c.kind == "contains":
        for x in c.left:
            for y in c.right:
                fx, fy = _named(x), _named(y)
                if all(is_induced_subgraph(fx, h) or is_induced_subgraph(fy, h) for h in (a, b)):
                    return x, y
        return None
    rel = is_induced_subgraph if c.kind == "sub" else (lambda s, t: is_induced_subgraph(t, s))
    first = next((x for x in c.left if rel(a, _named(x))), None)
    if first is None:
        return None
    if not c.right:
        return first, None
    second = next((y for y in c.right if rel(b, _named(y))), None)
    return None if second is None else (first, second)


def _match(c: Clause, pairs: Iterable[ClassPair]):
    for q in pairs:
        for a, b in q.orders():
            hit = _match_ordered(c, a, b)
            if hit is not None:
                return hit, a, b
    return None


def _open_lookup(table, pairs: Iterable[ClassPair]) -> str | None:
    pairs = set(pairs)
    for cid, x, ys in table:
        for y in ys:
            if ClassPair.of(_named(x), _named(y)) in pairs:
                return cid
    return None


def _display(h: Graph) -> str:
    for name in _display_names():
        if _canon(h) == _named(name):
            return name
    return "g6:" + to_graph6(h)


@lru_cache(maxsize=1)
def _display_names() -> tuple[str, ...]:
    from .catalog import NAMED

    extra = ("P1", "2P1", "P2", "K2", "P3", "coP3", "P1+P2", "K1_3", "co2P1+P2", "C4", "coC4", "coK1_3", "coK3+P1")
    return tuple(dict.fromkeys(NAMED + extra))


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    clause: str
    scope: Scope
    h1: str
    h2: str
    normalized: tuple[str, str]
    clause_text: str = ""
    construction: str | None = None
    witness_pair: tuple[str, str] | None = None

    def to_json(self) -> dict:
        return {
            "scope": self.scope.value,
            "outcome": self.outcome.value,
            "clause": self.clause,
            "clause_text": self.clause_text,
            "construction": self.construction,
            "h1": self.h1,
            "h2": self.h2,
            "normalized": list(self.normalized),
            "matched_as": None if self.witness_pair is None else list(self.witness_pair),
        }


def _classify(h1: Graph, h2: Graph, scope: Scope, table: tuple[Clause, ...], open_table) -> Verdict:
    raw = (_display(h1), _display(h2))
    p = normalize(ClassPair.of(h1, h2))
    closure = equivalence_closure(p)
    norm = (_display(p.h1), _display(p.h2))
    found: dict[Outcome, tuple] = {}
    for c in table:
        if c.outcome in found:
            continue
        use_closure = scope is Scope.GENERAL or c.closure
        hit = _match(c, closure if use_closure else [p])
        if hit is not None:
            found[c.outcome] = (c, hit)
    if Outcome.BOUNDED in found and Outcome.UNBOUNDED in found:
        b, u = found[Outcome.BOUNDED][0], found[Outcome.UNBOUNDED][0]
        raise ClassificationGap(f"{raw}: both {b.id} and {u.id} match")
    for outcome in (Outcome.BOUNDED, Outcome.UNBOUNDED):
        if outcome in found:
            c, ((x, y), a, b) = found[outcome]
            gen = c.generator(x, y) if outcome is Outcome.UNBOUNDED and scope is Scope.ATOMS else None
            return Verdict(outcome, c.id, scope, raw[0], raw[1], norm, c.text(), gen, (_display(a), _display(b)))
    cid = _open_lookup(open_table, [p] if scope is Scope.ATOMS else closure)
    if cid is None:
        raise ClassificationGap(f"{raw}: no clause or open case matches")
    return Verdict(Outcome.OPEN, cid, scope, raw[0], raw[1], norm, "listed open case")


def classify_atoms(h1: Graph, h2: Graph) -> Verdict:
    return _classify(h1, h2, Scope.ATOMS, ATOMS_TABLE, ATOMS_OPEN)


def classify_atoms_alt(h1: Graph, h2: Graph) -> Verdict:
    """The same question answered from the reformulated table."""
    return _classify(h1, h2, Scope.ATOMS, ATOMS_ALT_TABLE, ATOMS_OPEN)


def classify_general(h1: Graph, h2: Graph) -> Verdict:
    return _classify(h1, h2, Scope.GENERAL, GENERAL_TABLE, GENERAL_OPEN)


def classify(h1: Graph, h2: Graph, scope: Scope | str = Scope.ATOMS) -> Verdict:
    scope = Scope(scope)
    return classify_atoms(h1, h2) if scope is Scope.ATOMS else classify_general(h1, h2)


def open_pairs(table=ATOMS_OPEN, max_n: int | None = None) -> set[ClassPair]:
    """The listed open cases as normalized pairs, optionally size-limited."""
    out = set()
    for _, x, ys in table:
        for y in ys:
            a, b = _named(x), _named(y)
            if max_n is None or (a.n <= max_n and b.n <= max_n):
                out.add(ClassPair.of(a, b))
    return out


def all_clause_ids() -> set[str]:
    ids = {c.id for c in ATOMS_TABLE + GENERAL_TABLE + ATOMS_ALT_TABLE}
    return ids | {cid for cid, _, _ in ATOMS_OPEN + GENERAL_OPEN}


__all__ = [
    "ATOMS_ALT_TABLE", "ATOMS_OPEN", "ATOMS_TABLE", "ClassPair", "ClassificationGap", "Clause",
    "GENERAL_OPEN", "GENERAL_TABLE", "Outcome", "Scope", "Verdict", "all_clause_ids", "classify",
    "classify_atoms", "classify_atoms_alt", "classify_general", "equivalence_closure",
    "is_induced_subgraph", "normalize", "open_pairs",
]

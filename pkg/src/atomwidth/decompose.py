"""Bounded-width decomposition of (2P2, co(P2+P3))-free atoms.

An atom of the class either contains an induced C5, or is C5-free and
contains an induced C4, or is split and therefore complete.  For the two
cycle routes every vertex outside the cycle ``v_1 .. v_L`` is classified by
its neighbourhood on the cycle (class ``V_S`` for ``S`` a set of 1-based
cycle indices, read modulo ``L``).  A fixed list of structural claims about
these classes is checked at run time; they justify a short sequence of
vertex deletions, subgraph complementations and bipartite complementations
after which every remaining piece is edgeless, a cograph or a bipartite
chain graph.  The sequence is returned as a replayable transcript together
with clique-width expressions of width at most 3 for the pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .catalog import G
from .cwd import Expr, build_bipartite_chain, build_cograph, build_complete, build_edgeless, eval_graph, to_sexpr, width
from .graph import Graph, GraphError, bits, induced_subgraph, is_clique, mask_of, popcount, to_edgelist
from .recognizers import contains_induced, find_clique_cutset, induced_cycle, is_bipartite_chain, witness_or_none
from .transforms import StepKind, TransformStep, replay
from .canon import is_isomorphic

TWO_P2 = G("2P2")
CO_P2_P3 = G("co(P2+P3)")
P1_P2 = G("P1+P2")

ROUTE_BOUNDS = {
    "C5": {"DeleteVertex": 10, "BipartiteComplement": 6, "SubgraphComplement": 1},
    "C4": {"DeleteVertex": 8, "BipartiteComplement": 1, "SubgraphComplement": 0},
    "Split": {"DeleteVertex": 0, "BipartiteComplement": 0, "SubgraphComplement": 0},
}


# errors ------------------------------------------------------------------


class DecompositionError(Exception):
    pass


class NotInClass(DecompositionError):
    """The input contains 2P2 or co(P2+P3); ``witness`` is the embedding."""

    def __init__(self, pattern: str, witness: tuple[int, ...]):
        super().__init__(f"graph contains {pattern} at {list(witness)}")
        self.pattern = pattern
        self.witness = witness


class NotAtom(DecompositionError):
    """The input has a clique cut-set (empty when disconnected)."""

    def __init__(self, cutset: tuple[int, ...]):
        super().__init__(f"graph has clique cut-set {list(cutset)}")
        self.cutset = cutset


class InternalClaimViolation(DecompositionError):
    """A claim failed on an input that passed validation: a bug."""

    def __init__(self, report: "ClaimReport | None", detail: str = ""):
        msg = detail or (f"{report.route} claim {report.claim_id} (index {report.index}) failed, witness {list(report.witness)}" if report else "")
        super().__init__(msg)
        self.report = report


# neighbourhood classes -----------------------------------------------------


@dataclass(frozen=True)
class NeighborhoodPartition:
    """``classes[S]`` holds the vertices outside the cycle seeing exactly ``{v_i : i in S}``."""

    cycle: tuple[int, ...]
    classes: dict

    @property
    def length(self) -> int:
        return len(self.cycle)

    def idx(self, i: int) -> int:
        return (i - 1) % len(self.cycle) + 1

    def v(self, i: int) -> int:
        return self.cycle[self.idx(i) - 1]

    def key(self, *indices: int) -> frozenset:
        return frozenset(self.idx(i) for i in indices)

    def V(self, *indices: int) -> tuple[int, ...]:
        return self.classes.get(self.key(*indices), ())


def neighborhood_partition(g: Graph, cycle: Sequence[int]) -> NeighborhoodPartition:
    cyc = tuple(cycle)
    L = len(cyc)
    if L not in (4, 5) or len(set(cyc)) != L or any(not 0 <= v < g.n for v in cyc):
        raise GraphError("cycle must list four or five distinct vertices")
    for a in range(L):
        for b in range(a + 1, L):
            want = (b - a) % L in (1, L - 1)
            if g.has_edge(cyc[a], cyc[b]) != want:
                raise GraphError(f"{list(cyc)} is not an induced cycle")
    on = mask_of(cyc)
    classes: dict[frozenset, list[int]] = {}
    for x in bits(g.full_mask & ~on):
        s = frozenset(i + 1 for i, c in enumerate(cyc) if g.has_edge(x, c))
        classes.setdefault(s, []).append(x)
    return NeighborhoodPartition(cyc, {k: tuple(v) for k, v in classes.items()})


# claims ------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimReport:
    route: str
    claim_id: int
    index: int | None
    holds: bool
    witness: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"route": self.route, "claim": self.claim_id, "index": self.index, "holds": self.holds, "witness": list(self.witness)}


def _edge_within(g: Graph, s: Sequence[int]) -> tuple[int, int] | None:
    for a in range(len(s)):
        for b in range(a + 1, len(s)):
            if g.has_edge(s[a], s[b]):
                return s[a], s[b]
    return None


def _non_edge_between(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> tuple[int, int] | None:
    ys = list(ys)
    for x in xs:
        for y in ys:
            if x != y and not g.has_edge(x, y):
                return x, y
    return None


def _edges_between(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> list[tuple[int, int]]:
    ys = list(ys)
    return [(x, y) for x in xs for y in ys if g.has_edge(x, y)]


def _claims_c5(g: Graph, p: NeighborhoodPartition) -> list[ClaimReport]:
    out = []
    V, v = p.V, p.v

    def rep(cid: int, i: int | None, wit: tuple | None) -> None:
        out.append(ClaimReport("C5", cid, i, wit is None, tuple(wit or ())))

    for i in range(1, 6):
        bad = V(i) + V(i, i + 1) + V(i - 1, i, i + 1)
        rep(1, i, (bad[0], v(i), v(i + 2), v(i + 3)) if bad else None)
    for i in range(1, 6):
        e = _edge_within(g, V() + V(i, i + 2))
        rep(2, i, (v(i + 3), v(i + 4)) + e if e else None)
    for i in range(1, 6):
        s = V(i, i + 1, i + 3) + V(i, i + 1, i + 2, i + 3)
        wit = None
        if len(s) > 1:
            x, y = s[0], s[1]
            if g.has_edge(x, y):
                wit = (v(i), v(i + 3), x, v(i + 4), y)
            else:
                wit = (x, y, v(i), v(i + 3), v(i + 1))
        rep(3, i, wit)
    for i in range(1, 6):
        es = _edges_between(g, V(i, i + 2), V(i, i - 2))
        rep(4, i, es[0] + es[1] if len(es) > 1 else None)
    for i in range(1, 6):
        x = V(i, i + 2)
        miss = _non_edge_between(g, x, V(i - 1, i + 1))
        wit = None
        if miss:
            wit = (miss[0], v(i + 2), miss[1], v(i - 1))
        else:
            miss = _non_edge_between(g, x, V(i + 1, i + 3))
            if miss:
                wit = (miss[0], v(i), miss[1], v(i + 3))
        rep(5, i, wit)
    hub = V(1, 2, 3, 4, 5)
    wit = None
    for x in hub:
        rest = g.full_mask & ~(1 << x) & ~g.adj[x]
        if rest:
            wit = (x, min(bits(rest)))
            break
    rep(6, None, wit)
    return out


def _claims_c4(g: Graph, p: NeighborhoodPartition) -> list[ClaimReport]:
    out = []
    V, v = p.V, p.v

    def rep(cid: int, i: int | None, wit: tuple | None) -> None:
        out.append(ClaimReport("C4", cid, i, wit is None, tuple(wit or ())))

    hub = V(1, 2, 3, 4)
    for i in range(1, 5):
        bad = V(i, i + 1, i + 2)
        rep(1, i, (v(i), v(i + 2), v(i + 1), v(i + 3), bad[0]) if bad else None)
    for i in range(1, 5):
        e = _edge_within(g, V() + V(i) + V(i + 1) + V(i, i + 1))
        rep(2, i, e + (v(i + 2), v(i + 3)) if e else None)
    for i in range(1, 5):
        e = _edge_within(g, V(i, i + 1) + V(i, i + 2)) or _edge_within(g, V(i, i + 1) + V(i + 1, i + 3))
        rep(3, i, e)
    emb = contains_induced(induced_subgraph(g, hub), P1_P2) if len(hub) >= 3 else None
    rep(4, None, tuple(hub[k] for k in emb) if emb else None)
    for i in (1, 2):
        rep(5, i, _non_edge_between(g, V(i, i + 2), hub))
    for i in range(1, 5):
        left = V(i - 1) + V(i - 1, i)
        right = V(i, i + 1) + V(i + 1)
        rep(6, i, (left[0], right[0]) if left and right else None)
    wit = None
    d13, d24 = mask_of(V(1, 3)), mask_of(V(2, 4))
    for x in V():
        a, b = popcount(g.adj[x] & d13), popcount(g.adj[x] & d24)
        nice = (a >= 2 and b == 0) or (b >= 2 and a == 0)
        if not nice or _non_edge_between(g, [x], hub):
            wit = (x,)
            break
    rep(7, None, wit)
    for i in (1, 2):
        s = V(i, i + 1) + V(i + 2, i + 3)
        rep(8, i, s if len(s) > 2 else None)
    for i in range(1, 5):
        wit = _non_edge_between(g, V(i), hub)
        if wit is None:
            side = mask_of(V(i))
            seen = tuple(y for y in V(i, i + 2) if g.adj[y] & side)
            wit = seen if len(seen) > 1 else None
        rep(9, i, wit)
    return out


def verify_claims(g: Graph, partition: NeighborhoodPartition) -> list[ClaimReport]:
    """One report per claim and symmetry index for the cycle route of ``partition``."""
    if partition.length == 5:
        return _claims_c5(g, partition)
    return _claims_c4(g, partition)


def _require(reports: list[ClaimReport]) -> None:
    for r in reports:
        if not r.holds:
            raise InternalClaimViolation(r)


# transcripts ---------------------------------------------------------------


@dataclass(frozen=True)
class Residual:
    """A piece of the reduced graph on original vertex ids ``vertices``."""

    vertices: tuple[int, ...]
    graph: Graph
    expr: Expr | None

    @property
    def width(self) -> int:
        return 0 if self.expr is None else width(self.expr)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edgelist": to_edgelist(self.graph),
            "expr": None if self.expr is None else to_sexpr(self.expr),
            "width": self.width,
        }


@dataclass
class ReductionTranscript:
    route: str
    steps: list[TransformStep]
    residuals: list[Residual]
    cycle: tuple[int, ...] = ()
    rotation: int = 0
    claims: list[ClaimReport] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        out = {k.value: 0 for k in StepKind}
        for s in self.steps:
            out[s.kind.value] += 1
        return out

    def within_bounds(self) -> bool:
        bound = ROUTE_BOUNDS[self.route]
        return all(self.counts[k] <= bound[k] for k in bound)

    def to_json(self) -> dict:
        return {
            "route": self.route,
            "cycle": list(self.cycle),
            "rotation": self.rotation,
            "steps": [s.to_json() for s in self.steps],
            "residuals": [r.to_json() for r in self.residuals],
            "counts": self.counts,
        }


def assemble_residuals(residuals: Sequence[Residual], ids: Sequence[int]) -> Graph:
    """Disjoint union of the residuals, placed at the positions of ``ids``."""
    pos = {v: i for i, v in enumerate(ids)}
    covered = [v for r in residuals for v in r.vertices]
    if sorted(covered) != sorted(ids) or len(set(covered)) != len(covered):
        raise GraphError("residual vertex lists do not partition the remaining vertices")
    edges = []
    for r in residuals:
        for a, b in r.graph.edges():
            edges.append((pos[r.vertices[a]], pos[r.vertices[b]]))
    return Graph.from_edges(len(ids), edges)


def check_replay(g: Graph, t: ReductionTranscript) -> bool:
    """Replaying the steps on ``g`` gives exactly the union of the residuals."""
    cur, ids = replay(g, t.steps)
    if cur != assemble_residuals(t.residuals, ids):
        return False
    return all(r.expr is None or eval_graph(r.expr) == r.graph or is_isomorphic(eval_graph(r.expr), r.graph) for r in t.residuals)


class _Work:
    """Current graph on original ids, tracked alongside the recorded steps."""

    def __init__(self, g: Graph):
        self.rows = list(g.adj)
        self.alive = g.full_mask
        self.steps: list[TransformStep] = []

    def delete(self, v: int) -> None:
        for u in bits(self.rows[v]):
            self.rows[u] &= ~(1 << v)
        self.rows[v] = 0
        self.alive &= ~(1 << v)
        self.steps.append(TransformStep.delete(v))

    def flip_between(self, s: Iterable[int], t: Iterable[int]) -> None:
        sm, tm = mask_of(s) & self.alive, mask_of(t) & self.alive
        if not sm or not tm:
            return
        for v in bits(sm):
            self.rows[v] ^= tm
        for v in bits(tm):
            self.rows[v] ^= sm
        self.steps.append(TransformStep.complement_between(bits(sm), bits(tm)))

    def flip_within(self, s: Iterable[int]) -> None:
        sm = mask_of(s) & self.alive
        if not sm:
            return
        for v in bits(sm):
            self.rows[v] ^= sm & ~(1 << v)
        self.steps.append(TransformStep.complement_set(bits(sm)))

    def graph(self) -> Graph:
        return Graph(len(self.rows), tuple(self.rows))

    def live(self, vs: Iterable[int]) -> tuple[int, ...]:
        return tuple(v for v in vs if self.alive >> v & 1)

    def residual(self, vs: Sequence[int], expr_for) -> Residual:
        vs = tuple(sorted(vs))
        sub = induced_subgraph(self.graph(), vs)
        return Residual(vs, sub, expr_for(sub) if vs else None)


# validation ------------------------------------------------------------------


def validate(g: Graph) -> None:
    """Raise ``NotInClass`` or ``NotAtom`` unless ``g`` is an in-class atom."""
    if g.n == 0:
        raise NotAtom(())
    hit = witness_or_none(g, [TWO_P2, CO_P2_P3])
    if hit is not None:
        raise NotInClass("2P2" if hit[0] == TWO_P2 else "co(P2+P3)", hit[1])
    cut = find_clique_cutset(g)
    if cut is not None:
        raise NotAtom(cut.vertices)


# routes ------------------------------------------------------------------


def decompose_c5(g: Graph, cycle: Sequence[int], check: bool = True) -> ReductionTranscript:
    if check:
        validate(g)
    p = neighborhood_partition(g, cycle)
    if p.length != 5:
        raise GraphError("the C5 route needs a five-vertex cycle")
    reports = verify_claims(g, p)
    _require(reports)
    V, v = p.V, p.v
    w = _Work(g)
    # (1) each V_{i,i+1,i+3} u V_{i,i+1,i+2,i+3} has at most one member
    for i in range(1, 6):
        for x in sorted(V(i, i + 1, i + 3) + V(i, i + 1, i + 2, i + 3))[:1]:
            w.delete(x)
    hub = w.live(V(1, 2, 3, 4, 5))
    rest = [x for x in bits(w.alive) if x not in hub]
    # (2) the hub is complete to the rest, (3) and a clique
    if _non_edge_between(w.graph(), hub, rest) or not is_clique(w.graph(), hub):
        raise InternalClaimViolation(None, "C5 hub is not a dominating clique")
    w.flip_between(hub, rest)
    w.flip_within(hub)
    # (4) at most one edge between V_{i,i+2} and V_{i,i-2}
    for i in range(1, 6):
        es = _edges_between(w.graph(), w.live(V(i, i + 2)), w.live(V(i, i - 2)))
        if len(es) > 1:
            raise InternalClaimViolation(None, f"C5 classes {i},{i + 2} / {i},{i - 2} share {len(es)} edges")
        for a, b in es:
            w.delete(min(a, b))
    # (5) unzip the cycle together with the diagonal classes
    for i in range(1, 6):
        left = w.live(V(i - 1, i + 1)) + (v(i),)
        right = w.live(V(i, i + 2)) + (v(i + 1),)
        if _non_edge_between(w.graph(), left, right):
            raise InternalClaimViolation(None, f"C5 unzip pair {i} is not complete")
        w.flip_between(left, right)
    final = w.graph()
    if any(final.adj[x] for x in bits(w.alive)):
        raise InternalClaimViolation(None, "C5 residual is not edgeless")
    residual = w.residual(list(bits(w.alive)), lambda h: build_edgeless(h.n))
    return ReductionTranscript("C5", w.steps, [residual], tuple(p.cycle), 0, reports)


def decompose_c4(g: Graph, cycle: Sequence[int], check: bool = True) -> ReductionTranscript:
    if check:
        validate(g)
        c5 = induced_cycle(g, 5)
        if c5 is not None:
            raise GraphError(f"the C4 route needs a C5-free graph; found C5 at {c5}")
    p = neighborhood_partition(g, cycle)
    if p.length != 4:
        raise GraphError("the C4 route needs a four-vertex cycle")
    reports = verify_claims(g, p)
    _require(reports)
    V = p.V
    w = _Work(g)
    # (1) the classes V_{i,i+1} hold at most two vertices in total
    sides = sorted(V(1, 2) + V(2, 3) + V(3, 4) + V(1, 4))
    if len(sides) > 2:
        raise InternalClaimViolation(None, f"C4 side classes hold {len(sides)} vertices")
    for x in sides:
        w.delete(x)
    # (2) drop the cycle
    for x in sorted(p.cycle):
        w.delete(x)
    # (3) at most one vertex of V_{i,i+2} sees V_i, for the (at most two) non-empty V_i
    for i in range(1, 5):
        own = mask_of(V(i))
        for y in [y for y in w.live(V(i, i + 2)) if w.rows[y] & own][:1]:
            w.delete(y)
    # (4) rotate so that V_3 and V_4 are empty
    rot = next((r for r in range(4) if not V(3 + r) and not V(4 + r)), None)
    if rot is None:
        raise InternalClaimViolation(None, "no rotation empties V_3 and V_4")

    def R(*ix: int) -> tuple[int, ...]:
        return w.live(V(*(i + rot for i in ix)))

    hub = R(1, 2, 3, 4)
    rest = [x for x in bits(w.alive) if x not in hub]
    if _non_edge_between(w.graph(), hub, rest):
        raise InternalClaimViolation(None, "C4 hub is not complete to the rest")
    if _edges_between(w.graph(), R(1), R(1, 3)) or _edges_between(w.graph(), R(2), R(2, 4)):
        raise InternalClaimViolation(None, "C4 diagonal classes still see their single classes")
    # (5) split the hub off
    w.flip_between(hub, rest)
    residuals = []
    if hub:
        res = w.residual(hub, build_cograph)
        residuals.append(res)
    if rest:
        chain = induced_subgraph(w.graph(), sorted(rest))
        if is_bipartite_chain(chain) is None:
            raise InternalClaimViolation(None, "C4 remainder is not a bipartite chain graph")
        residuals.append(w.residual(rest, build_bipartite_chain))
    return ReductionTranscript("C4", w.steps, residuals, tuple(p.cycle), rot, reports)


def decompose(g: Graph) -> ReductionTranscript:
    """Validate ``g`` and run the matching route."""
    validate(g)
    c5 = induced_cycle(g, 5)
    if c5 is not None:
        t = decompose_c5(g, c5, check=False)
    else:
        c4 = induced_cycle(g, 4)
        if c4 is not None:
            t = decompose_c4(g, c4, check=False)
        else:
            if g.m != g.n * (g.n - 1) // 2:
                raise InternalClaimViolation(None, "split atom is not complete")
            vs = tuple(range(g.n))
            t = ReductionTranscript("Split", [], [Residual(vs, g, build_complete(g.n))])
    if not check_replay(g, t):
        raise InternalClaimViolation(None, "transcript replay does not match the residuals")
    if not t.within_bounds():
        raise InternalClaimViolation(None, f"step counts {t.counts} exceed the {t.route} bounds")
    if any(r.width > 3 for r in t.residuals):
        raise InternalClaimViolation(None, "residual expression wider than 3")
    return t


__all__ = [
    "ClaimReport",
    "DecompositionError",
    "InternalClaimViolation",
    "NeighborhoodPartition",
    "NotAtom",
    "NotInClass",
    "ROUTE_BOUNDS",
    "ReductionTranscript",
    "Residual",
    "assemble_residuals",
    "check_replay",
    "decompose",
    "decompose_c4",
    "decompose_c5",
    "neighborhood_partition",
    "validate",
    "verify_claims",
]

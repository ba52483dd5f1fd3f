"""Exhaustive and randomized property suites shared by ``selftest`` and the tests.

Each suite returns a :class:`SuiteResult`; ``failures`` holds printable
witnesses (empty when the property holds everywhere).
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .canon import canonical_code, is_isomorphic
from .catalog import NAMED, G, complete
from .classify import (
    ClassificationGap,
    ClassPair,
    Outcome,
    classify_atoms,
    classify_atoms_alt,
    classify_general,
    is_induced_subgraph,
    normalize,
    open_pairs,
)
from .corpus import graphs, graphs_up_to
from .cwd import build_bipartite_chain, build_complete, eval_graph, width
from .decompose import ROUTE_BOUNDS, TWO_P2, CO_P2_P3, DecompositionError, check_replay, decompose
from .graph import Graph, complement, false_twin_pairs
from .recognizers import (
    has_dominating_vertex,
    has_nonadjacent_pair_complete_to_rest,
    is_atom,
    is_bipartite_chain,
    is_h_free,
)
from .transforms import add_apex_pair, twin_double


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": [str(f) for f in self.failures[:20]],
            "stats": self.stats,
            "seconds": round(self.seconds, 3),
        }


# bipartite chain graphs ----------------------------------------------------


def random_bipartite(rng: random.Random, max_n: int = 14) -> tuple[Graph, list[int], list[int]]:
    """A random bipartite graph with shuffled ids; half of the draws are chain graphs."""
    n = rng.randint(2, max_n)
    a = rng.randint(1, n - 1)
    top, bottom = list(range(a)), list(range(a, n))
    edges = []
    if rng.random() < 0.5:
        # nested neighbourhoods: top vertex t sees a prefix of bottom
        order = bottom[:]
        rng.shuffle(order)
        for t in top:
            k = rng.randint(0, len(order))
            edges += [(t, b) for b in order[:k]]
    else:
        p = rng.random()
        edges = [(t, b) for t in top for b in bottom if rng.random() < p]
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])
    return g, sorted(perm[t] for t in top), sorted(perm[b] for b in bottom)


def chain_suite(count: int = 1000, max_n: int = 14, seed: int = 0) -> SuiteResult:
    res = SuiteResult("chain")
    start = time.perf_counter()
    rng = random.Random(seed)
    chains = 0
    for _ in range(count):
        g, _, _ = random_bipartite(rng, max_n)
        fast = is_bipartite_chain(g) is not None
        slow = is_h_free(g, TWO_P2)
        res.checked += 1
        if fast != slow:
            res.failures.append(("recognition", g.adj))
            continue
        if fast:
            chains += 1
            e = build_bipartite_chain(g)
            if width(e) > 3 or not is_isomorphic(eval_graph(e), g):
                res.failures.append(("expression", g.adj))
    res.stats = {"chain_instances": chains}
    res.seconds = time.perf_counter() - start
    return res


# split atoms ---------------------------------------------------------------


def split_suite(max_n: int = 9, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("split_atoms")
    start = time.perf_counter()
    atoms = 0
    for n in range(1, max_n + 1):
        for g in graphs("split", n, jobs):
            res.checked += 1
            if is_atom(g):
                atoms += 1
                if g.m != n * (n - 1) // 2:
                    res.failures.append(("non-complete split atom", g.adj))
        e = build_complete(n)
        if width(e) != min(n, 2) or eval_graph(e) != complete(n):
            res.failures.append(("build_complete", n))
    res.stats = {"split_atoms": atoms}
    res.seconds = time.perf_counter() - start
    return res


# decomposition -------------------------------------------------------------


def _decompose_one(g: Graph) -> tuple[str, dict | None, str | None]:
    try:
        t = decompose(g)
    except DecompositionError as exc:
        return "error", None, f"{type(exc).__name__}: {exc}"
    bad = [r for r in t.claims if not r.holds]
    info = {
        "route": t.route,
        "counts": t.counts,
        "max_width": max((r.width for r in t.residuals), default=0),
        "claims": len(t.claims),
        "claim_failures": len(bad),
        "replay": check_replay(g, t),
        "within_bounds": t.within_bounds(),
    }
    return "ok", info, None


def in_class_atoms(max_n: int, jobs: int = 1) -> list[Graph]:
    """Connected (2P2, co(P2+P3))-free atoms, filtered from the full corpus."""
    out = []
    for g in graphs_up_to("all", max_n, jobs, connected=True):
        if is_h_free(g, [TWO_P2, CO_P2_P3]) and is_atom(g):
            out.append(g)
    return out


def decompose_suite(max_n: int = 8, jobs: int = 1, inputs: list[Graph] | None = None) -> SuiteResult:
    res = SuiteResult("decompose")
    start = time.perf_counter()
    gs = in_class_atoms(max_n, jobs) if inputs is None else inputs
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outs = list(pool.map(_decompose_one, gs, chunksize=16))
    else:
        outs = [_decompose_one(g) for g in gs]
    routes: dict[str, int] = {}
    peak: dict[str, dict[str, int]] = {r: {k: 0 for k in b} | {"width": 0} for r, b in ROUTE_BOUNDS.items()}
    claims = 0
    replays = 0
    for g, (status, info, err) in zip(gs, outs):
        res.checked += 1
        if status != "ok":
            res.failures.append((err, g.adj))
            continue
        routes[info["route"]] = routes.get(info["route"], 0) + 1
        claims += info["claims"]
        p = peak[info["route"]]
        for k, c in info["counts"].items():
            p[k] = max(p[k], c)
        p["width"] = max(p["width"], info["max_width"])
        if info["claim_failures"]:
            res.failures.append(("claim violation", g.adj))
        if not info["within_bounds"]:
            res.failures.append(("count bound", info["counts"], g.adj))
        if info["max_width"] > 3:
            res.failures.append(("width", g.adj))
        if info["replay"]:
            replays += 1
        else:
            res.failures.append(("replay", g.adj))
    res.stats = {"routes": routes, "peak": peak, "claims_checked": claims, "replays_ok": replays}
    res.seconds = time.perf_counter() - start
    return res


# meta transformations ----------------------------------------------------


def _catalog_patterns(max_n: int = 7) -> list[Graph]:
    seen, out = set(), []
    for name in NAMED + ("K2", "P1+P2", "K1_3", "C5", "coC5", "bull", "claw", "co(P1+P2)"):
        h = G(name)
        code = canonical_code(h)
        if h.n <= max_n and code not in seen:
            seen.add(code)
            out.append(h)
    return out


def meta_suite(max_n: int = 6) -> SuiteResult:
    res = SuiteResult("meta")
    start = time.perf_counter()
    patterns = _catalog_patterns()
    twin_ok = [h for h in patterns if not false_twin_pairs(h)]
    apex_ok = [h for h in patterns if not has_dominating_vertex(h) and not has_nonadjacent_pair_complete_to_rest(h)]
    preserved = 0
    for g in graphs_up_to("all", max_n, connected=True):
        if g.n >= 2:
            t = twin_double(g)
            res.checked += 1
            if not is_atom(t):
                res.failures.append(("twin_double not an atom", g.adj))
            for h in twin_ok:
                if is_h_free(g, h):
                    preserved += 1
                    if not is_h_free(t, h):
                        res.failures.append(("twin_double", h.name, g.adj))
        if g.m < g.n * (g.n - 1) // 2:
            a = add_apex_pair(g)
            res.checked += 1
            if not is_atom(a):
                res.failures.append(("add_apex_pair not an atom", g.adj))
            for h in apex_ok:
                if is_h_free(g, h):
                    preserved += 1
                    if not is_h_free(a, h):
                        res.failures.append(("add_apex_pair", h.name, g.adj))
    res.stats = {"twin_patterns": len(twin_ok), "apex_patterns": len(apex_ok), "preservation_checks": preserved}
    res.seconds = time.perf_counter() - start
    return res


# classifier ---------------------------------------------------------------


def classifier_suite(max_n: int = 5) -> SuiteResult:
    """Consistency of the classifier over all pairs of graphs with at most ``max_n`` vertices."""
    res = SuiteResult("classifier")
    start = time.perf_counter()
    gs = graphs_up_to("all", max_n)
    idx = range(len(gs))
    atoms: dict[tuple[int, int], Outcome] = {}
    general: dict[tuple[int, int], Outcome] = {}
    open_found: set[ClassPair] = set()
    for a, b in itertools.combinations_with_replacement(idx, 2):
        res.checked += 1
        try:
            va = classify_atoms(gs[a], gs[b])
            vg = classify_general(gs[a], gs[b])
            vt = classify_atoms_alt(gs[a], gs[b])
        except ClassificationGap as exc:
            res.failures.append(("gap", str(exc)))
            continue
        atoms[a, b] = atoms[b, a] = va.outcome
        general[a, b] = general[b, a] = vg.outcome
        if vt.outcome is not va.outcome:
            res.failures.append(("alternative table disagrees", va.h1, va.h2, va.outcome.value, vt.outcome.value))
        if vg.outcome is Outcome.BOUNDED and va.outcome is not Outcome.BOUNDED:
            res.failures.append(("general bounded, atoms not", va.h1, va.h2))
        if va.outcome is Outcome.UNBOUNDED and vg.outcome is not Outcome.UNBOUNDED:
            res.failures.append(("atoms unbounded, general not", va.h1, va.h2))
        vc = classify_general(complement(gs[a]), complement(gs[b]))
        if vc.outcome is not vg.outcome:
            res.failures.append(("complement changes general verdict", va.h1, va.h2))
        if va.outcome is Outcome.OPEN:
            open_found.add(normalize(ClassPair.of(gs[a], gs[b])))
    # induced-subgraph monotonicity
    below = [[is_induced_subgraph(gs[x], gs[y]) for y in idx] for x in idx]
    mono = 0
    for table in (atoms, general):
        for (a, b), out in table.items():
            if a > b or out is Outcome.OPEN:
                continue
            for c in idx:
                for d in idx:
                    smaller = below[c][a] and below[d][b]
                    larger = below[a][c] and below[b][d]
                    if out is Outcome.BOUNDED and smaller or out is Outcome.UNBOUNDED and larger:
                        mono += 1
                        if table.get((c, d)) is not out:
                            res.failures.append(("monotonicity", a, b, c, d, out.value))
    expected = open_pairs(max_n=max_n)
    if open_found != expected:
        res.failures.append(("open set", sorted(map(str, open_found ^ expected))))
    five = len(graphs("all", max_n))
    res.stats = {
        "graphs": len(gs),
        "pairs": res.checked,
        "pairs_on_exactly_max_n": five * (five + 1) // 2,
        "open_pairs": len(open_found),
        "monotonicity_checks": mono,
        "atoms_outcomes": _tally(atoms),
        "general_outcomes": _tally(general),
    }
    res.seconds = time.perf_counter() - start
    return res


def _tally(table: dict) -> dict[str, int]:
    out: dict[str, int] = {}
    for (a, b), v in table.items():
        if a <= b:
            out[v.value] = out.get(v.value, 0) + 1
    return out


__all__ = [
    "SuiteResult", "chain_suite", "classifier_suite", "decompose_suite", "in_class_atoms",
    "meta_suite", "random_bipartite", "split_suite",
]

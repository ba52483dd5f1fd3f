"""Parameterised families of atoms with large clique-width.

Every family is registered in :data:`CONSTRUCTIONS` together with the
induced subgraphs it is claimed to avoid and whether it is claimed to be an
atom; the test-suite re-checks these claims at small parameters.

Coordinates used throughout:

* ``wall(h)`` has rows ``y = 0..h`` (top to bottom) and columns
  ``x = 0..2h+1``.  Row 0 lacks ``x = 0``; row ``h`` lacks ``x = 2h+1`` when
  ``h`` is even and ``x = 0`` when ``h`` is odd.  Rows are paths; rows ``y``
  and ``y+1`` are joined at every column ``x`` with ``x = y+1 (mod 2)`` where
  both ends exist.  Vertex ids run row by row, left to right.
* Grids use ``v(i, j) = i*n + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .catalog import G
from .cwd import WidthCertificate
from .graph import Graph, GraphError, complement, is_connected
from .recognizers import contains_induced, in_class_S, in_class_coS, is_atom, is_bipartite, is_chordal
from .transforms import (
    add_apex_pair,
    bipartite_complement,
    delete_vertices,
    k_subdivide,
    line_graph,
    subgraph_complement,
    twin_double,
)

# building blocks ---------------------------------------------------------


def wall_layout(h: int) -> list[tuple[int, int]]:
    """``(x, y)`` of every vertex of ``wall(h)``, indexed by vertex id."""
    if h < 2:
        raise GraphError("walls need height at least 2")
    width = 2 * h + 2
    out = []
    for y in range(h + 1):
        for x in range(width):
            if y == 0 and x == 0:
                continue
            if y == h and x == (width - 1 if h % 2 == 0 else 0):
                continue
            out.append((x, y))
    return out


def wall(h: int) -> Graph:
    pos = wall_layout(h)
    index = {p: i for i, p in enumerate(pos)}
    edges = []
    for (x, y), i in index.items():
        right = index.get((x + 1, y))
        if right is not None:
            edges.append((i, right))
        if x % 2 == (y + 1) % 2:
            down = index.get((x, y + 1))
            if down is not None:
                edges.append((i, down))
    return Graph.from_edges(len(pos), edges, f"wall({h})")


def grid(n: int, m: int | None = None) -> Graph:
    """``n x m`` grid; vertex ``(i, j)`` has id ``i*m + j``."""
    m = n if m is None else m
    edges = []
    for i in range(n):
        for j in range(m):
            if j + 1 < m:
                edges.append((i * m + j, i * m + j + 1))
            if i + 1 < n:
                edges.append((i * m + j, (i + 1) * m + j))
    return Graph.from_edges(n * m, edges, f"grid({n},{m})")


def _add_edges(g: Graph, edges) -> Graph:
    return Graph.from_edges(g.n, list(g.edges()) + list(edges))


def _make_clique(g: Graph, vs) -> Graph:
    vs = sorted(vs)
    return _add_edges(g, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]])


def _add_vertex(g: Graph, nbrs) -> Graph:
    return Graph.from_edges(g.n + 1, list(g.edges()) + [(v, g.n) for v in nbrs])


def _sides(g: Graph) -> tuple[list[int], list[int]]:
    parts = is_bipartite(g)
    if parts is None:
        raise GraphError("expected a bipartite graph")
    return parts


# families -----------------------------------------------------------------


def need_s_cos_pair(h1: Graph, h2: Graph) -> tuple[Graph, Graph]:
    """``(W, co W)`` with ``W`` the ``k``-subdivided height-2 wall, ``k = max |V(H_i)|``.

    ``W`` avoids both graphs when neither is in S; ``co W`` avoids both when
    neither complement is in S.
    """
    direct = not in_class_S(h1) and not in_class_S(h2)
    comp = not in_class_coS(h1) and not in_class_coS(h2)
    if not (direct or comp):
        raise GraphError("one of the graphs lies in S and one complement lies in S")
    w = k_subdivide(wall(2), max(h1.n, h2.n))
    return w, complement(w)


def line_graph_wall(k: int) -> Graph:
    return line_graph(wall(k))


def bell_grid(n: int) -> Graph:
    """The 1-subdivided ``n x n`` grid with two extra edges per cell.

    In cell ``(r, c)`` the subdivision vertex of the left side is joined to
    that of the top side, and the bottom one to the right one.
    """
    if n < 2:
        raise GraphError("n must be at least 2")
    base = grid(n)
    sub = k_subdivide(base, 1)
    mid = {e: base.n + r for r, e in enumerate(base.edges())}

    def s(a: tuple[int, int], b: tuple[int, int]) -> int:
        u, v = a[0] * n + a[1], b[0] * n + b[1]
        return mid[(min(u, v), max(u, v))]

    extra = []
    for r in range(n - 1):
        for c in range(n - 1):
            left = s((r, c), (r + 1, c))
            top = s((r, c), (r, c + 1))
            bottom = s((r + 1, c), (r + 1, c + 1))
            right = s((r, c + 1), (r + 1, c + 1))
            extra += [(left, top), (bottom, right)]
    return _add_edges(sub, extra)


def apexed_co_bell(n: int) -> Graph:
    return add_apex_pair(complement(bell_grid(n)))


def wall_colours(h: int) -> list[int]:
    """Colours 1..4 of ``wall(h)``; a vertex has no two neighbours of one colour.

    Reading the mirrored row ``x' = 2h+1-x`` from the left, the top row is
    coloured ``1,2,3,4,1,...`` and rows alternate with ``3,4,1,2,3,...``.
    """
    return [((2 * h + 1 - x) + 2 * (y % 2)) % 4 + 1 for x, y in wall_layout(h)]


def colored_wall(n: int) -> Graph:
    if n < 2:
        raise GraphError("n must be at least 2")
    h = 2 * n + 1
    g = wall(h)
    colours = wall_colours(h)
    for c in range(1, 5):
        g = _make_clique(g, [v for v in range(g.n) if colours[v] == c])
    return g


def colored_wall_co(n: int) -> Graph:
    return complement(colored_wall(n))


def diamond_p2p4_apex(n: int) -> Graph:
    """Subdivided wall, original sides made complete to each other, apex on the subdivision vertices."""
    w = wall(n)
    a, c = _sides(w)
    g = k_subdivide(w, 1)
    g = _add_edges(g, [(x, y) for x in a for y in c])
    return _add_vertex(g, range(w.n, g.n))


def diamond_p2p4_apex_co(n: int) -> Graph:
    return complement(diamond_p2p4_apex(n))


def bipcomp_subdivided_wall(n: int) -> Graph:
    g = k_subdivide(wall(n), 1)
    a, b = _sides(g)
    return bipartite_complement(g, a, b)


def bipcomp_subdivided_wall_co(n: int) -> Graph:
    return complement(bipcomp_subdivided_wall(n))


def _lozin_volz_ids(n: int) -> tuple[dict, dict]:
    v = {}
    w = {}
    nxt = 0
    for i in range(n + 1):
        for j in range(1, n + 1):
            v[(i, j)] = nxt
            nxt += 1
    for i in range(1, n + 1):
        for j in range(n + 1):
            w[(i, j)] = nxt
            nxt += 1
    return v, w


def lozin_volz_full(n: int) -> Graph:
    """The bipartite ``2P3``-free graph ``G_n`` on ``v[i,j]`` (``i<=n, 1<=j``) and ``w[i,j]`` (``1<=i, j<=n``)."""
    if n < 3:
        raise GraphError("n must be at least 3")
    v, w = _lozin_volz_ids(n)
    edges = []
    r = range(1, n + 1)
    for i in r:
        for j in r:
            for k in r:
                if k >= i:
                    edges.append((v[(i, j)], w[(k, 0)]))
                if k >= j:
                    edges.append((w[(i, j)], v[(0, k)]))
            edges.append((v[(i, j)], w[(i, j)]))
            edges.append((v[(0, j)], w[(i, 0)]))
    return Graph.from_edges(len(v) + len(w), edges)


def lozin_volz(n: int) -> Graph:
    v, w = _lozin_volz_ids(n)
    return delete_vertices(lozin_volz_full(n), [v[(n, n)], w[(n, n)]])


def apexed_co_lozin(n: int) -> Graph:
    return add_apex_pair(complement(lozin_volz_full(n)))


def lozin_volz_certificate(n: int) -> WidthCertificate:
    """Grid partition of ``lozin_volz_full(n)`` with ``m = 0``."""
    v, w = _lozin_volz_ids(n)
    part: dict[tuple[int, int], tuple[int, ...]] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            part[(i, j)] = (v[(i, j)], w[(i, j)])
        part[(i, 0)] = (w[(i, 0)],)
        part[(0, i)] = (v[(0, i)],)
    return WidthCertificate(0, n, part)


def grid_certificate(n: int) -> tuple[Graph, WidthCertificate]:
    """The ``n x n`` grid with singleton cells ``V[i,j] = {(i-1, j-1)}`` and ``m = 1``."""
    part = {(i, j): ((i - 1) * n + (j - 1),) for i in range(1, n + 1) for j in range(1, n + 1)}
    return grid(n), WidthCertificate(1, n, part)


def wall7_cliques(n: int) -> Graph:
    """7-subdivided wall with three vertex classes turned into cliques.

    From the 1-subdivided wall (original vertices ``P``, subdivision vertices
    ``Q``) take a further 3-subdivision; its new vertices next to ``P`` form
    ``A``, those next to ``Q`` form ``C`` and the middle ones ``B``.  The sets
    ``P+C``, ``Q+A`` and ``B`` are complemented.
    """
    w = wall(n)
    s1 = k_subdivide(w, 1)
    s3 = k_subdivide(s1, 3)
    p = list(range(w.n))
    q = list(range(w.n, s1.n))
    a, b, c = [], [], []
    for r, (x, y) in enumerate(s1.edges()):
        assert x < w.n <= y
        base = s1.n + 3 * r
        a.append(base)
        b.append(base + 1)
        c.append(base + 2)
    g = subgraph_complement(s3, p + c)
    g = subgraph_complement(g, q + a)
    return subgraph_complement(g, b)


def wall7_cliques_co(n: int) -> Graph:
    return complement(wall7_cliques(n))


def wall7_cliques_co_twin(n: int) -> Graph:
    return twin_double(wall7_cliques_co(n))


def grid3color(n: int) -> Graph:
    if n < 3:
        raise GraphError("n must be at least 3")
    g = grid(n)
    for k in range(3):
        g = subgraph_complement(g, [i * n + j for i in range(n) for j in range(n) if (i + j) % 3 == k])
    return g


def grid3color_co(n: int) -> Graph:
    return complement(grid3color(n))


def _corner_grid_ids(n: int, extra: bool = False) -> dict:
    ids = {}
    for i in range(n + 1):
        for j in range(n + 1):
            if (i, j) != (0, 0):
                ids[(i, j)] = len(ids)
    if extra:
        ids[(0, n + 1)] = len(ids)
    return ids


def cochordal_K4free(n: int) -> Graph:
    """``G_n`` on ``v[i,j]``, ``(i,j) != (0,0)``: threshold edges to the border plus ``v[i,0] v[0,j]``."""
    if n < 3:
        raise GraphError("n must be at least 3")
    ids = _corner_grid_ids(n)
    r = range(1, n + 1)
    edges = []
    for i in r:
        for j in r:
            for k in r:
                if k >= i:
                    edges.append((ids[(i, j)], ids[(k, 0)]))
                if k >= j:
                    edges.append((ids[(i, j)], ids[(0, k)]))
            edges.append((ids[(i, 0)], ids[(0, j)]))
    return Graph.from_edges(len(ids), edges)


def cochordal_K4free_twin(n: int) -> Graph:
    return twin_double(cochordal_K4free(n))


def chordal_J(n: int) -> Graph:
    """From ``co G_{n+1}`` delete ``v[1,i]`` and ``v[i,1]`` and add ``v[0,n+1] v[n+1,0]``."""
    if n < 2:
        raise GraphError("n must be at least 2")
    ids = _corner_grid_ids(n + 1)
    h = complement(cochordal_K4free(n + 1))
    h = _add_edges(h, [(ids[(0, n + 1)], ids[(n + 1, 0)])])
    gone = {ids[(1, i)] for i in range(1, n + 2)} | {ids[(i, 1)] for i in range(1, n + 2)}
    return delete_vertices(h, gone)


def q_graph(base: Graph) -> Graph:
    """``q(G)``: complete multipartite parts ``A_v`` (size ``deg v``) and ``B_e``
    (size 2) with a perfect matching ``A``-``B`` along incidences.

    Ids: the ``A`` parts come first in vertex order, then ``B_e`` in edge
    order.  Slots of ``A_v`` are consumed in edge-lexicographic order.
    """
    degs = [base.degree(v) for v in range(base.n)]
    start = []
    total = 0
    for d in degs:
        start.append(total)
        total += d
    part_of = []
    for v, d in enumerate(degs):
        part_of += [v] * d
    es = base.edges()
    b0 = total
    n = total + 2 * len(es)
    edges = []
    for x in range(total):
        for y in range(x + 1, total):
            if part_of[x] != part_of[y]:
                edges.append((x, y))
    for x in range(2 * len(es)):
        for y in range(x + 1, 2 * len(es)):
            if x // 2 != y // 2:
                edges.append((b0 + x, b0 + y))
    used = [0] * base.n
    for r, (u, v) in enumerate(es):
        for side, end in enumerate((u, v)):
            edges.append((b0 + 2 * r + side, start[end] + used[end]))
            used[end] += 1
    return Graph.from_edges(n, edges)


def q_of_grid(t: int) -> Graph:
    if t < 2:
        raise GraphError("t must be at least 2")
    return q_graph(grid(t))


def q_of_grid_twin(t: int) -> Graph:
    return twin_double(q_of_grid(t))


def q_of_grid_co(t: int) -> Graph:
    return complement(q_of_grid(t))


def subwall_coA_apex(n: int) -> Graph:
    w = wall(n)
    g = k_subdivide(w, 1)
    g = _make_clique(g, range(w.n))
    return _add_vertex(g, range(w.n, g.n))


def chain_over_split(n: int) -> Graph:
    """Threshold grid plus ``v[0,n+1]``, then ``A = {v[i,0]}`` is made complete
    to ``B = {v[0,j]}`` and turned into a clique."""
    if n < 2:
        raise GraphError("n must be at least 2")
    ids = _corner_grid_ids(n, extra=True)
    r = range(1, n + 1)
    edges = []
    for i in r:
        for j in r:
            for k in r:
                if k >= i:
                    edges.append((ids[(i, j)], ids[(k, 0)]))
                if k >= j:
                    edges.append((ids[(i, j)], ids[(0, k)]))
            edges.append((ids[(i, j)], ids[(0, n + 1)]))
    g = Graph.from_edges(len(ids), edges)
    a = [ids[(i, 0)] for i in r]
    b = [ids[(0, j)] for j in range(1, n + 2)]
    g = bipartite_complement(g, a, b)
    return subgraph_complement(g, a)


def wall_coA_two_apex(k: int) -> Graph:
    w = wall(k)
    a, _ = _sides(w)
    return add_apex_pair(_make_clique(w, a))


# registry -----------------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    """A generator with the properties it is claimed to have.

    ``extra`` holds further named predicates (e.g. bipartite) that must hold.
    ``claimed_atom`` is ``None`` for families whose atom status is not
    claimed (they only feed a doubled or complemented variant).
    ``atom_from`` is the smallest parameter at which the atom claim applies.
    """

    id: str
    build: Callable[[int], Graph]
    params: tuple[int, int]
    claimed_free: tuple[str, ...]
    claimed_atom: bool | None = True
    atom_from: int = 0
    extra: tuple[tuple[str, Callable[[Graph], bool]], ...] = ()
    param_name: str = "n"

    def atom_claimed_at(self, p: int) -> bool | None:
        """The claimed value of ``is_atom`` at parameter ``p``, or ``None`` if unclaimed."""
        if self.claimed_atom is None or p < self.atom_from:
            return None
        return self.claimed_atom

    def free_graphs(self) -> list[Graph]:
        return [G(h) for h in self.claimed_free]


def _bip(g: Graph) -> bool:
    return is_bipartite(g) is not None


def _cobip(g: Graph) -> bool:
    return is_bipartite(complement(g)) is not None


def _cochordal(g: Graph) -> bool:
    return is_chordal(complement(g))


def _maxdeg3(g: Graph) -> bool:
    return all(g.degree(v) <= 3 for v in range(g.n))


_REGISTRY = [
    Construction("wall", wall, (2, 3), (), extra=(("bipartite", _bip), ("max_degree_3", _maxdeg3)), param_name="h"),
    Construction("line_graph_wall", line_graph_wall, (2, 3), ("C4", "K1_3", "K4", "diamond"), param_name="k"),
    Construction("apexed_co_bell", apexed_co_bell, (2, 3), ("2P2", "K3+P1", "4P1", "2P1+P2")),
    Construction("colored_wall", colored_wall, (2, 3), ("diamond", "5P1")),
    Construction("colored_wall_co", colored_wall_co, (2, 3), ("2P1+P2", "K5")),
    Construction("diamond_p2p4_apex", diamond_p2p4_apex, (2, 3), ("diamond", "P2+P4", "P1+P6")),
    Construction("diamond_p2p4_apex_co", diamond_p2p4_apex_co, (2, 3), ("2P1+P2", "coP2+P4", "coP1+P6")),
    Construction(
        "bipcomp_subdivided_wall", bipcomp_subdivided_wall, (2, 3),
        ("2P1+2P2", "2P1+P4", "4P1+P2", "3P2"), extra=(("bipartite", _bip),),
    ),
    Construction(
        "bipcomp_subdivided_wall_co", bipcomp_subdivided_wall_co, (2, 3),
        ("co2P1+2P2", "co2P1+P4", "co4P1+P2", "co3P2"), extra=(("co-bipartite", _cobip),),
    ),
    Construction("lozin_volz", lozin_volz, (3, 4), ("2P3",), extra=(("bipartite", _bip),)),
    Construction("apexed_co_lozin", apexed_co_lozin, (3, 4), ("co2P3",), extra=(("co-bipartite", _cobip),)),
    Construction("wall7_cliques", wall7_cliques, (2, 3), ("4P1", "gem")),
    Construction("wall7_cliques_co", wall7_cliques_co, (2, 3), ("K4", "P1+P4"), claimed_atom=None),
    Construction("wall7_cliques_co_twin", wall7_cliques_co_twin, (2, 3), ("K4", "P1+P4")),
    Construction("grid3color", grid3color, (7, 8), ("4P1", "co3P1+P2"), atom_from=7),
    Construction("grid3color_co", grid3color_co, (7, 8), ("K4", "3P1+P2"), atom_from=7),
    Construction(
        "cochordal_K4free", cochordal_K4free, (3, 4), ("K4",), claimed_atom=None,
        extra=(("co-chordal", _cochordal),),
    ),
    Construction(
        "cochordal_K4free_twin", cochordal_K4free_twin, (3, 4), ("K4",),
        extra=(("co-chordal", _cochordal),),
    ),
    Construction("chordal_J", chordal_J, (2, 3), ("C4", "4P1")),
    Construction("q_of_grid", q_of_grid, (2, 3), ("gem", "P1+2P2"), claimed_atom=None, param_name="t"),
    Construction("q_of_grid_twin", q_of_grid_twin, (2, 3), ("gem", "P1+2P2"), param_name="t"),
    Construction("q_of_grid_co", q_of_grid_co, (2, 3), ("P1+P4", "coP1+2P2"), param_name="t"),
    Construction("subwall_coA_apex", subwall_coA_apex, (2, 3), ("coP2+P3", "coP1+2P2", "P1+2P2", "P6")),
    Construction("chain_over_split", chain_over_split, (2, 3), ("2P2", "coP2+P4")),
    Construction("wall_coA_two_apex", wall_coA_two_apex, (2, 3), ("2P2", "coP5", "co3P2"), param_name="k"),
]

CONSTRUCTIONS: dict[str, Construction] = {c.id: c for c in _REGISTRY}


def build(construction_id: str, param: int) -> Graph:
    try:
        c = CONSTRUCTIONS[construction_id]
    except KeyError:
        raise GraphError(f"unknown construction {construction_id!r}") from None
    return c.build(param).named(f"{construction_id}({param})")


def verify_claims(construction_id: str, param: int) -> dict:
    """Re-check the claimed properties of one instance.

    ``ok`` is false iff some claimed forbidden graph occurs, some extra
    predicate fails, or ``is_atom`` differs from a claimed atom value.
    """
    c = CONSTRUCTIONS[construction_id]
    g = build(construction_id, param)
    free = {}
    for name in c.claimed_free:
        emb = contains_induced(g, G(name))
        free[name] = None if emb is None else list(emb)
    extra = {name: pred(g) for name, pred in c.extra}
    claimed = c.atom_claimed_at(param)
    atom = is_atom(g)
    ok = all(w is None for w in free.values()) and all(extra.values()) and claimed in (None, atom)
    return {
        "id": construction_id,
        "param": param,
        "n": g.n,
        "m": g.m,
        "free": free,
        "extra": extra,
        "atom": atom,
        "claimed_atom": claimed,
        "ok": ok,
    }


def is_valid_atom_input(g: Graph) -> bool:
    """Inputs accepted by the meta constructions (connected, at least two vertices)."""
    return g.n >= 2 and is_connected(g)


__all__ = [
    "CONSTRUCTIONS", "Construction", "build", "verify_claims", "wall", "wall_layout", "grid",
    "need_s_cos_pair", "line_graph_wall", "bell_grid", "apexed_co_bell",
    "wall_colours", "colored_wall", "colored_wall_co", "diamond_p2p4_apex",
    "diamond_p2p4_apex_co", "bipcomp_subdivided_wall", "bipcomp_subdivided_wall_co",
    "lozin_volz_full", "lozin_volz", "apexed_co_lozin", "lozin_volz_certificate",
    "grid_certificate", "wall7_cliques", "wall7_cliques_co", "wall7_cliques_co_twin",
    "grid3color", "grid3color_co", "cochordal_K4free", "cochordal_K4free_twin",
    "chordal_J", "q_graph", "q_of_grid", "q_of_grid_twin", "q_of_grid_co",
    "subwall_coA_apex", "chain_over_split", "wall_coA_two_apex",
]

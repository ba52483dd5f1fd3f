"""Graph operations used by the constructions and the decomposer.

Vertex deletion, subgraph complementation and bipartite complementation are
the three operations recorded in decomposition transcripts.  The remaining
functions build new graphs (subdivisions, line graphs, twin doubling, apex
pairs); new vertices always get ids ``>= n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .graph import (
    Graph,
    GraphError,
    bits,
    check_vertex_set,
    induced_subgraph,
    is_connected,
    mask_of,
)


def subgraph_complement(g: Graph, s: Iterable[int]) -> Graph:
    sel = mask_of(check_vertex_set(g, s))
    rows = list(g.adj)
    for v in bits(sel):
        rows[v] ^= sel & ~(1 << v)
    return Graph(g.n, tuple(rows))


def bipartite_complement(g: Graph, s: Iterable[int], t: Iterable[int]) -> Graph:
    sm = mask_of(check_vertex_set(g, s))
    tm = mask_of(check_vertex_set(g, t))
    if sm & tm:
        raise GraphError("bipartite complementation needs disjoint sets")
    rows = list(g.adj)
    for v in bits(sm):
        rows[v] ^= tm
    for v in bits(tm):
        rows[v] ^= sm
    return Graph(g.n, tuple(rows))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    gone = mask_of(check_vertex_set(g, s))
    return induced_subgraph(g, bits(g.full_mask & ~gone))


def k_subdivide(g: Graph, k: int) -> Graph:
    """Replace every edge by a path with ``k`` internal vertices.

    The internal vertices of the ``r``-th edge (lexicographic order) get ids
    ``n + r*k .. n + r*k + k - 1``, listed from the smaller endpoint.
    """
    if k < 0:
        raise GraphError("k must be non-negative")
    if k == 0:
        return Graph(g.n, g.adj)
    edges = []
    nxt = g.n
    for u, v in g.edges():
        path = [u] + list(range(nxt, nxt + k)) + [v]
        nxt += k
        edges.extend(zip(path, path[1:]))
    return Graph.from_edges(nxt, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``r`` is the ``r``-th edge in lexicographic order."""
    es = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for r, (u, v) in enumerate(es):
        incident[u].append(r)
        incident[v].append(r)
    out = set()
    for lst in incident:
        for i in range(len(lst)):
            for j in range(i + 1, len(lst)):
                out.add((lst[i], lst[j]))
    return Graph.from_edges(len(es), sorted(out))


def twin_double(g: Graph) -> Graph:
    """Give every vertex ``v`` a false twin ``v + n``.

    The input must be connected with at least two vertices; the output is
    then an atom containing ``g`` as an induced subgraph.
    """
    if g.n < 2 or not is_connected(g):
        raise GraphError("twin doubling needs a connected graph on at least two vertices")
    n = g.n
    edges = []
    for u, v in g.edges():
        edges += [(u, v), (u, v + n), (u + n, v), (u + n, v + n)]
    return Graph.from_edges(2 * n, edges)


def add_apex_pair(g: Graph) -> Graph:
    """Add non-adjacent ``x = n`` and ``x' = n + 1``, both complete to ``V(g)``."""
    if all(g.adj[v] | 1 << v == g.full_mask for v in range(g.n)):
        raise GraphError("apex pair needs a graph with at least one non-edge")
    n = g.n
    edges = g.edges() + [(v, a) for a in (n, n + 1) for v in range(n)]
    return Graph.from_edges(n + 2, edges)


# transcript steps ---------------------------------------------------------


class StepKind(str, Enum):
    DELETE_VERTEX = "DeleteVertex"
    SUBGRAPH_COMPLEMENT = "SubgraphComplement"
    BIPARTITE_COMPLEMENT = "BipartiteComplement"


@dataclass(frozen=True)
class TransformStep:
    """One recorded operation.

    Payload ids always refer to vertices of the graph the transcript started
    from, so deletions never shift the meaning of later steps.
    """

    kind: StepKind
    payload: tuple

    @classmethod
    def delete(cls, v: int) -> "TransformStep":
        return cls(StepKind.DELETE_VERTEX, (v,))

    @classmethod
    def complement_set(cls, s: Iterable[int]) -> "TransformStep":
        return cls(StepKind.SUBGRAPH_COMPLEMENT, (tuple(sorted(s)),))

    @classmethod
    def complement_between(cls, s: Iterable[int], t: Iterable[int]) -> "TransformStep":
        return cls(StepKind.BIPARTITE_COMPLEMENT, (tuple(sorted(s)), tuple(sorted(t))))

    def to_json(self) -> dict:
        if self.kind is StepKind.DELETE_VERTEX:
            payload: object = self.payload[0]
        elif self.kind is StepKind.SUBGRAPH_COMPLEMENT:
            payload = list(self.payload[0])
        else:
            payload = [list(self.payload[0]), list(self.payload[1])]
        return {"kind": self.kind.value, "payload": payload}

    @classmethod
    def from_json(cls, data: dict) -> "TransformStep":
        kind = StepKind(data["kind"])
        p = data["payload"]
        if kind is StepKind.DELETE_VERTEX:
            return cls.delete(int(p))
        if kind is StepKind.SUBGRAPH_COMPLEMENT:
            return cls.complement_set(p)
        return cls.complement_between(p[0], p[1])


def replay(g: Graph, steps: Sequence[TransformStep]) -> tuple[Graph, list[int]]:
    """Apply ``steps`` to ``g``.

    Returns the resulting graph together with the original ids of its
    vertices (vertex ``i`` of the result is original vertex ``ids[i]``).
    """
    cur = g
    ids = list(range(g.n))
    for step in steps:
        pos = {v: i for i, v in enumerate(ids)}

        def local(vs: Iterable[int]) -> list[int]:
            try:
                return [pos[v] for v in vs]
            except KeyError as exc:
                raise GraphError(f"step refers to deleted or unknown vertex {exc.args[0]}") from None

        if step.kind is StepKind.DELETE_VERTEX:
            (v,) = local(step.payload)
            cur = delete_vertices(cur, [v])
            del ids[v]
        elif step.kind is StepKind.SUBGRAPH_COMPLEMENT:
            cur = subgraph_complement(cur, local(step.payload[0]))
        else:
            cur = bipartite_complement(cur, local(step.payload[0]), local(step.payload[1]))
    return cur, ids

"""Immutable simple graphs on vertices ``0..n-1`` backed by adjacency bitmasks.

Every other module consumes :class:`Graph`.  Neighbourhoods are stored as
Python ints used as bitsets, so set algebra over vertex ids is cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised on malformed graphs, vertex sets or input files."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  Equality ignores
    ``name``, which is only a display label for catalog graphs.
    """

    n: int
    adj: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise GraphError(f"bad neighbourhood for vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), name)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def named(self, name: str | None) -> "Graph":
        return Graph(self.n, self.adj, name)

    # queries ------------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"


def check_vertex_set(g: Graph, s: Iterable[int]) -> list[int]:
    """Return ``s`` as a sorted duplicate-free list, validating its range."""
    out = sorted(set(s))
    for v in out:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise GraphError(f"vertex {v!r} out of range for n={g.n}")
    return out


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``; vertex ``s[i]`` (sorted) becomes ``i``."""
    verts = check_vertex_set(g, s)
    pos = {v: i for i, v in enumerate(verts)}
    sel = mask_of(verts)
    rows = []
    for v in verts:
        rows.append(mask_of(pos[u] for u in bits(g.adj[v] & sel)))
    return Graph(len(verts), tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(row << shift for row in g2.adj))


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, by minimum member."""
    rest = g.full_mask if within is None else within
    comps = []
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    return [list(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True for graphs with exactly one component (the null graph is not)."""
    return len(component_masks(g)) == 1


def false_twin_pairs(g: Graph) -> list[tuple[int, int]]:
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] == g.adj[v]:
                out.append((u, v))
    return out


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    sel = mask_of(check_vertex_set(g, s))
    return all((g.adj[v] | 1 << v) & sel == sel for v in bits(sel))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    sel = mask_of(check_vertex_set(g, s))
    return all(not g.adj[v] & sel for v in bits(sel))


def _two_sets(g: Graph, x: Iterable[int], y: Iterable[int]) -> tuple[list[int], int]:
    xs = check_vertex_set(g, x)
    ym = mask_of(check_vertex_set(g, y))
    if mask_of(xs) & ym:
        raise GraphError("vertex sets overlap")
    return xs, ym


def is_complete_to(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    xs, ym = _two_sets(g, x, y)
    return all(g.adj[v] & ym == ym for v in xs)


def is_anticomplete_to(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    xs, ym = _two_sets(g, x, y)
    return all(not g.adj[v] & ym for v in xs)


def is_matching_between(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    """Every vertex of either set has at most one neighbour in the other."""
    xs, ym = _two_sets(g, x, y)
    xm = mask_of(xs)
    return all(popcount(g.adj[v] & ym) <= 1 for v in xs) and all(
        popcount(g.adj[v] & xm) <= 1 for v in bits(ym)
    )


# text formats -----------------------------------------------------------


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``u v`` lines; ``#`` comments are ignored."""
    rows: list[list[int]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise GraphError(f"non-integer token in line {raw!r}") from exc
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    n, m = rows[0]
    body = rows[1:]
    if any(len(r) != 2 for r in body):
        raise GraphError("edge lines must contain exactly two ids")
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} were given")
    edges = [(u, v) for u, v in body]
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as graph6 (upper triangle, column-major, 6-bit groups)."""
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bitlist = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    while len(bitlist) % 6:
        bitlist.append(0)
    body = []
    for k in range(0, len(bitlist), 6):
        val = 0
        for b in bitlist[k:k + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d < 64 for d in data):
        raise GraphError("invalid graph6 string")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] < 63:
        if len(data) < 4:
            raise GraphError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        if len(data) < 8:
            raise GraphError("truncated graph6 header")
        n = 0
        for d in data[2:8]:
            n = n << 6 | d
        rest = data[8:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise GraphError("graph6 body has wrong length")
    flat = []
    for d in rest:
        flat.extend((d >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if flat[k]:
                edges.append((i, j))
            k += 1
    if any(flat[need:]):
        raise GraphError("graph6 padding bits must be zero")
    return Graph.from_edges(n, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("not a permutation")
    rows = [0] * g.n
    for v in range(g.n):
        rows[perm[v]] = mask_of(perm[u] for u in bits(g.adj[v]))
    return Graph(g.n, tuple(rows))

"""Induced-subgraph search, clique cut-sets and class recognizers."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import (
    Graph,
    bits,
    component_masks,
    complement,
    is_connected,
    mask_of,
    popcount,
)

# induced subgraphs -------------------------------------------------------


def search_order(h: Graph) -> list[int]:
    """Order in which pattern vertices are matched.

    Start from a vertex of maximum degree, then repeatedly take the vertex
    with most already-ordered neighbours (ties: higher degree, lower id).
    Connected patterns are thus matched along edges, which prunes early.
    """
    if h.n == 0:
        return []
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        v = min(remaining, key=lambda u: (-popcount(h.adj[u] & placed), -popcount(h.adj[u]), u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


@lru_cache(maxsize=512)
def automorphisms(h: Graph) -> tuple[tuple[int, ...], ...]:
    """All automorphisms of a (small) pattern graph."""
    n = h.n
    perms = []
    img = [0] * n

    def extend(v: int, used: int) -> None:
        if v == n:
            perms.append(tuple(img))
            return
        for u in range(n):
            if used >> u & 1 or popcount(h.adj[u]) != popcount(h.adj[v]):
                continue
            if all(h.has_edge(v, w) == h.has_edge(u, img[w]) for w in range(v)):
                img[v] = u
                extend(v + 1, used | 1 << u)

    extend(0, 0)
    return tuple(perms)


@lru_cache(maxsize=512)
def symmetry_constraints(h: Graph) -> tuple[tuple[int, int], ...]:
    """Pairs ``(a, b)`` such that requiring ``emb[a] < emb[b]`` keeps one
    embedding per automorphism class of images (stabiliser-chain rule)."""
    group = list(automorphisms(h))
    out = []
    while len(group) > 1:
        orbits = {v: {p[v] for p in group} for v in range(h.n)}
        v = max(range(h.n), key=lambda u: (len(orbits[u]), -u))
        out += [(v, w) for w in sorted(orbits[v]) if w != v]
        group = [p for p in group if p[v] == v]
    return tuple(out)


def _search(g: Graph, h: Graph, breaking: bool) -> tuple[int, ...] | None:
    k = h.n
    if k == 0:
        return ()
    if k > g.n or h.m > g.m:
        return None
    order = search_order(h)
    step_of = {v: i for i, v in enumerate(order)}
    nbr_steps = []
    for i, v in enumerate(order):
        nbr_steps.append([j for j in range(i) if h.has_edge(order[j], v)])
    non_steps = [[j for j in range(i) if j not in set(nbr_steps[i])] for i in range(k)]
    above: list[list[int]] = [[] for _ in range(k)]  # image must exceed these steps' images
    below: list[list[int]] = [[] for _ in range(k)]
    if breaking:
        for a, b in symmetry_constraints(h):
            sa, sb = step_of[a], step_of[b]
            if sa < sb:
                above[sb].append(sa)
            else:
                below[sa].append(sb)
    deg_ok = []
    gdeg = [popcount(r) for r in g.adj]
    for v in order:
        d = popcount(h.adj[v])
        dn = k - 1 - d
        deg_ok.append(mask_of(u for u in range(g.n) if gdeg[u] >= d and g.n - 1 - gdeg[u] >= dn))
    full = g.full_mask
    image = [0] * k
    adj = g.adj

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = deg_ok[i] & ~used
        for j in nbr_steps[i]:
            cand &= adj[image[j]]
        for j in non_steps[i]:
            cand &= full & ~adj[image[j]]
        for j in above[i]:
            cand &= ~((2 << image[j]) - 1)
        for j in below[i]:
            cand &= (1 << image[j]) - 1
        while cand:
            low = cand & -cand
            image[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
            cand ^= low
        return False

    if not extend(0, 0):
        return None
    emb = [0] * k
    for i, v in enumerate(order):
        emb[v] = image[i]
    return tuple(emb)


def contains_induced(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Return an induced embedding of ``h`` into ``g`` or ``None``.

    The result maps pattern vertex ``i`` to ``emb[i]``.  Among all
    embeddings, the one returned is lexicographically least when listed in
    :func:`search_order` of ``h``.  Existence is first decided by a search
    that only visits one embedding per automorphism class.
    """
    if not _exists(g, h):
        return None
    return _search(g, h, False)


def _exists(g: Graph, h: Graph, co_g: Graph | None = None) -> bool:
    # dense hosts are searched through the complement pair, which prunes better
    if 4 * g.m > g.n * (g.n - 1):
        return _search(co_g or complement(g), complement(h), True) is not None
    return _search(g, h, True) is not None


def is_h_free(g: Graph, hs: Graph | Iterable[Graph]) -> bool:
    if isinstance(hs, Graph):
        hs = [hs]
    co_g = complement(g) if 4 * g.m > g.n * (g.n - 1) else None
    return not any(_exists(g, h, co_g) for h in hs)


# clique cut-sets ---------------------------------------------------------


@dataclass(frozen=True)
class CliqueCutset:
    vertices: tuple[int, ...]


def minimal_elimination_ordering(g: Graph) -> tuple[list[int], tuple[int, ...]]:
    """MCS-M: a minimal elimination ordering and its minimal triangulation.

    Returns ``(order, fill_adj)`` where ``order[0]`` is eliminated first and
    ``fill_adj`` is the adjacency of the triangulation.
    """
    n = g.n
    weight = [0] * n
    unnumbered = g.full_mask
    fill = list(g.adj)
    picked: list[int] = []
    for _ in range(n):
        v = max(bits(unnumbered), key=lambda u: (weight[u], -u))
        unnumbered &= ~(1 << v)
        # bottleneck search: best[u] = least possible maximum internal weight
        best = {v: -1}
        heap = [(-1, v)]
        reached = []
        while heap:
            b, x = heapq.heappop(heap)
            if b > best.get(x, n + 1):
                continue
            for u in bits(g.adj[x] & unnumbered):
                cost = b if x == v else max(b, weight[x])
                if cost < best.get(u, n + 1):
                    best[u] = cost
                    heapq.heappush(heap, (cost, u))
        for u, b in best.items():
            if u != v and b < weight[u]:
                reached.append(u)
        for u in reached:
            weight[u] += 1
            fill[u] |= 1 << v
            fill[v] |= 1 << u
        picked.append(v)
    order = picked[::-1]
    return order, tuple(fill)


def find_clique_cutset(g: Graph) -> CliqueCutset | None:
    """Some clique whose deletion disconnects ``g``, or ``None``.

    For a disconnected graph the empty set is returned.  Otherwise candidate
    separators are the higher neighbourhoods in a minimal triangulation
    obtained from MCS-M; every clique minimal separator of ``g`` is among them.
    """
    if g.n <= 1:
        return None
    if not is_connected(g):
        return CliqueCutset(())
    order, fill = minimal_elimination_ordering(g)
    rank = {v: i for i, v in enumerate(order)}
    seen: set[int] = set()
    for x in order:
        later = mask_of(u for u in bits(fill[x]) if rank[u] > rank[x])
        if not later or later in seen:
            continue
        seen.add(later)
        if not _is_clique_mask(g, later):
            continue
        if len(component_masks(g, g.full_mask & ~later)) > 1:
            return CliqueCutset(tuple(bits(later)))
    return None


def _is_clique_mask(g: Graph, sel: int) -> bool:
    return all((g.adj[v] | 1 << v) & sel == sel for v in bits(sel))


def is_clique_cutset(g: Graph, s: Iterable[int]) -> bool:
    sel = mask_of(s)
    return _is_clique_mask(g, sel) and len(component_masks(g, g.full_mask & ~sel)) > 1


def is_atom(g: Graph) -> bool:
    return is_connected(g) and find_clique_cutset(g) is None


# special classes ---------------------------------------------------------


def is_bipartite(g: Graph) -> tuple[list[int], list[int]] | None:
    """A bipartition ``(A, B)`` (BFS 2-colouring from least ids) or ``None``."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    return [v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1]


def is_split(g: Graph) -> tuple[list[int], list[int]] | None:
    """A split partition ``(K, I)`` with ``K`` a clique and ``I`` independent.

    Uses the degree-sequence test: with degrees sorted decreasingly and
    ``m = max{i : d_i >= i - 1}``, the graph is split iff
    ``sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i``.
    """
    verts = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in verts]
    m = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            m = i
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    k, ind = sorted(verts[:m]), sorted(verts[m:])
    assert _is_clique_mask(g, mask_of(k)) and not any(g.adj[v] & mask_of(ind) for v in ind)
    return k, ind


def is_chordal(g: Graph) -> bool:
    """No induced cycle of length at least four (MCS + elimination check)."""
    n = g.n
    weight = [0] * n
    left = g.full_mask
    picked = []
    for _ in range(n):
        v = max(bits(left), key=lambda u: (weight[u], -u))
        left &= ~(1 << v)
        for u in bits(g.adj[v] & left):
            weight[u] += 1
        picked.append(v)
    order = picked[::-1]
    rank = {v: i for i, v in enumerate(order)}
    for v in order:
        later = mask_of(u for u in bits(g.adj[v]) if rank[u] > rank[v])
        if not _is_clique_mask(g, later):
            return False
    return True


def is_complete_multipartite(g: Graph) -> bool:
    """Non-adjacency is an equivalence relation (complement is a union of cliques)."""
    for v in range(g.n):
        for u in bits(g.full_mask & ~g.adj[v] & ~(1 << v)):
            if g.adj[u] != g.adj[v]:
                return False
    return True


@dataclass(frozen=True)
class ChainOrdering:
    """Bipartition with nested neighbourhoods.

    ``top`` and ``bottom`` are the two sides; along ``top`` neighbourhoods
    shrink: ``N(top[i+1]) <= N(top[i])`` (and likewise along ``bottom``).
    """

    top: tuple[int, ...]
    bottom: tuple[int, ...]


def is_bipartite_chain(g: Graph) -> ChainOrdering | None:
    parts = is_bipartite(g)
    if parts is None:
        return None
    a, b = parts
    top = sorted(a, key=lambda v: (-g.degree(v), v))
    bottom = sorted(b, key=lambda v: (-g.degree(v), v))
    for side in (top, bottom):
        for x, y in zip(side, side[1:]):
            if g.adj[y] & ~g.adj[x]:
                return None
    return ChainOrdering(tuple(top), tuple(bottom))


def in_class_S(h: Graph) -> bool:
    """Every component is a path or a subdivided claw."""
    for comp in component_masks(h):
        size = popcount(comp)
        degs = [popcount(h.adj[v]) for v in bits(comp)]
        if sum(degs) // 2 != size - 1:
            return False
        if max(degs, default=0) > 3 or sum(1 for d in degs if d == 3) > 1:
            return False
    return True


def in_class_coS(h: Graph) -> bool:
    return in_class_S(complement(h))


def has_dominating_vertex(h: Graph) -> bool:
    return any(h.adj[v] | 1 << v == h.full_mask for v in range(h.n))


def has_nonadjacent_pair_complete_to_rest(h: Graph) -> bool:
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if h.has_edge(u, v):
                continue
            rest = h.full_mask & ~(1 << u) & ~(1 << v)
            if h.adj[u] == rest and h.adj[v] == rest:
                return True
    return False


def induced_cycle(g: Graph, length: int) -> list[int] | None:
    """Vertices of an induced cycle of the given length, in cyclic order."""
    from .catalog import cycle

    emb = contains_induced(g, cycle(length))
    return None if emb is None else list(emb)


def witness_or_none(g: Graph, hs: Sequence[Graph]) -> tuple[Graph, tuple[int, ...]] | None:
    """First pattern in ``hs`` contained in ``g`` together with its embedding."""
    for h in hs:
        emb = contains_induced(g, h)
        if emb is not None:
            return h, emb
    return None

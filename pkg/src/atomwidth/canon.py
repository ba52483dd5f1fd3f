"""Canonical labelling by colour refinement and individualization.

The canonical code of a graph is the lexicographically largest adjacency
code over all leaves of the individualization tree.  Two pruning rules keep
the tree small: twins inside a cell are only tried once, and automorphisms
found at the leaves prune equivalent choices at the root.
"""

from __future__ import annotations

from .graph import Graph, bits, mask_of, popcount


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Refine an ordered partition (list of cell bitmasks) to equitability."""
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        out: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                row = adj[v]
                key = tuple(popcount(row & c) for c in cells)
                groups[key] = groups.get(key, 0) | 1 << v
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                out.append(groups[key])
        cells = out
    return cells


def _initial(g: Graph) -> list[int]:
    by_deg: dict[int, int] = {}
    for v in range(g.n):
        d = popcount(g.adj[v])
        by_deg[d] = by_deg.get(d, 0) | 1 << v
    return _refine(g.adj, [by_deg[d] for d in sorted(by_deg)])


def _leaf_code(adj: tuple[int, ...], cells: list[int]) -> tuple[tuple[int, ...], list[int]]:
    order = [c.bit_length() - 1 for c in cells]
    pos = [0] * len(adj)
    for p, v in enumerate(order):
        pos[v] = p
    code = tuple(mask_of(pos[u] for u in bits(adj[v])) for v in order)
    return code, order


def _individualize(cells: list[int], idx: int, v: int) -> list[int]:
    cell = cells[idx]
    return cells[:idx] + [1 << v, cell & ~(1 << v)] + cells[idx + 1:]


def _target_cell(cells: list[int]) -> int:
    best = -1
    best_size = 0
    for i, c in enumerate(cells):
        size = popcount(c)
        if size > 1 and (best < 0 or size < best_size):
            best, best_size = i, size
    return best


def _twin_reps(adj: tuple[int, ...], cell: int) -> list[int]:
    """One vertex per twin class (true or false twins) within ``cell``."""
    reps: list[int] = []
    for v in bits(cell):
        for r in reps:
            if adj[v] & ~(1 << r) == adj[r] & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


def canonical_order(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(code, order)``: ``order[p]`` is the vertex placed at position ``p``."""
    if g.n == 0:
        return (), []
    adj = g.adj
    best: list = [None, None]
    first_leaf: list = [None]
    autos: list[list[int]] = []

    def search(cells: list[int]) -> None:
        idx = _target_cell(cells)
        if idx < 0:
            code, order = _leaf_code(adj, cells)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            elif code == best[0]:
                # composing two leaves with equal codes gives an automorphism
                perm = [0] * g.n
                for a, b in zip(best[1], order):
                    perm[a] = b
                autos.append(perm)
            if first_leaf[0] is None:
                first_leaf[0] = order
            return
        for v in _twin_reps(adj, cells[idx]):
            search(_refine(adj, _individualize(cells, idx, v)))

    root = _initial(g)
    idx = _target_cell(root)
    if idx < 0:
        search(root)
        return best[0], best[1]
    # root level with orbit pruning from discovered automorphisms
    done = 0
    for v in _twin_reps(adj, root[idx]):
        if done >> v & 1:
            continue
        search(_refine(adj, _individualize(root, idx, v)))
        done |= 1 << v
        done = _orbit_closure(done, autos)
    return best[0], best[1]


def _orbit_closure(mask: int, autos: list[list[int]]) -> int:
    grown = True
    while grown:
        grown = False
        for perm in autos:
            img = mask_of(perm[v] for v in bits(mask))
            if img & ~mask:
                mask |= img
                grown = True
    return mask


def canonical_code(g: Graph) -> tuple[int, tuple[int, ...]]:
    """An isomorphism invariant that is complete: equal iff isomorphic."""
    return g.n, canonical_order(g)[0]


def canonical_graph(g: Graph) -> Graph:
    code = canonical_order(g)[0]
    return Graph(g.n, tuple(code))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(popcount(r) for r in g1.adj) != sorted(popcount(r) for r in g2.adj):
        return False
    return canonical_code(g1) == canonical_code(g2)

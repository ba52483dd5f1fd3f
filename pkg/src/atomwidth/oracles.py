"""Slow, obviously-correct reference implementations used to test the fast ones."""

from __future__ import annotations

import itertools

from .graph import Graph, bits, component_masks


def all_cliques(g: Graph):
    """Every clique of ``g`` (including the empty one) as a bitmask."""

    def grow(clique: int, cand: int):
        yield clique
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from grow(clique | low, cand & g.adj[v])

    yield from grow(0, g.full_mask)


def brute_clique_cutset(g: Graph) -> int | None:
    """Some clique whose removal leaves at least two components, as a bitmask."""
    if g.n <= 1:
        return None
    for k in sorted(all_cliques(g), key=lambda c: (bin(c).count("1"), c)):
        if len(component_masks(g, g.full_mask & ~k)) > 1:
            return k
    return None


def brute_canonical(g: Graph, labels: tuple[int, ...] | None = None) -> tuple:
    """Least (labels, edges) encoding over all vertex permutations.

    Label names are renamed in order of first appearance so that two labelled
    graphs differing only by a renaming of labels get the same form.
    """
    n = g.n
    best = None
    for perm in itertools.permutations(range(n)):
        # perm[p] = original vertex placed at position p
        pos = [0] * n
        for p, v in enumerate(perm):
            pos[v] = p
        if labels is None:
            lab: tuple = ()
        else:
            rename: dict[int, int] = {}
            lab = tuple(rename.setdefault(labels[v], len(rename) + 1) for v in perm)
        edges = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges()))
        key = (lab, edges)
        if best is None or key < best:
            best = key
    return (n, best)


def _from_key(key: tuple) -> tuple[Graph, tuple[int, ...]]:
    n, (lab, edges) = key
    return Graph.from_edges(n, edges), lab


def labelled_closure(k: int, max_n: int) -> dict[int, set]:
    """All ``k``-labelled graphs buildable with ``k`` labels, by vertex count.

    Returns canonical keys (see :func:`brute_canonical`) grouped by size.
    Exponential; intended for ``max_n <= 5``.
    """
    by_size: dict[int, set] = {}
    for size in range(1, max_n + 1):
        seeds = set()
        if size == 1:
            seeds.add(brute_canonical(Graph.empty(1), (1,)))
        for a in range(1, size // 2 + 1):
            b = size - a
            for ka in by_size[a]:
                ga, la = _from_key(ka)
                for kb in by_size[b]:
                    gb, lb = _from_key(kb)
                    names_b = sorted(set(lb))
                    for img in itertools.permutations(range(1, k + 1), len(names_b)):
                        ren = dict(zip(names_b, img))
                        labs = la + tuple(ren[x] for x in lb)
                        if len(set(labs)) > k:
                            continue
                        rows = ga.adj + tuple(r << a for r in gb.adj)
                        seeds.add(brute_canonical(Graph(size, rows), labs))
        done = set()
        todo = list(seeds)
        while todo:
            key = todo.pop()
            if key in done:
                continue
            done.add(key)
            gr, lab = _from_key(key)
            present = sorted(set(lab))
            for i in present:
                for j in present:
                    if i == j:
                        continue
                    # relabel i -> j
                    nl = tuple(j if x == i else x for x in lab)
                    todo.append(brute_canonical(gr, nl))
                    if i < j:
                        mi = [v for v in range(size) if lab[v] == i]
                        mj = [v for v in range(size) if lab[v] == j]
                        edges = set(gr.edges()) | {(min(u, v), max(u, v)) for u in mi for v in mj}
                        todo.append(brute_canonical(Graph.from_edges(size, edges), lab))
        by_size[size] = done
    return by_size


def graphs_of_width_at_most(k: int, max_n: int) -> dict[int, set]:
    """Unlabelled canonical keys of graphs with clique-width at most ``k``."""
    out: dict[int, set] = {}
    for size, keys in labelled_closure(k, max_n).items():
        out[size] = {brute_canonical(_from_key(key)[0]) for key in keys}
    return out


def brute_induced_embedding(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """First induced embedding in ``itertools.permutations`` order."""
    he = set(h.edges())
    for img in itertools.permutations(range(g.n), h.n):
        if all(((a, b) in he) == g.has_edge(img[a], img[b]) for a in range(h.n) for b in range(a + 1, h.n)):
            return img
    return None


def is_connected_brute(g: Graph, within: int) -> bool:
    verts = list(bits(within))
    if not verts:
        return False
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for u in verts:
            if u not in seen and g.has_edge(u, v):
                seen.add(u)
                stack.append(u)
    return len(seen) == len(verts)

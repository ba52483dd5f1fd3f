"""Grid certificates with one injected violation per partition property."""

from atomwidth.constructions import grid
from atomwidth.cwd import WidthCertificate
from atomwidth.graph import Graph


def _grid_host(n=5, extra_vertices=0, add=(), remove=()):
    """The n x n grid with singleton cells, extra vertices and edge edits."""
    base = grid(n)
    gid = lambda i, j: (i - 1) * n + (j - 1)
    edges = set(base.edges())
    for a, b in remove:
        edges.discard(tuple(sorted((gid(*a), gid(*b)))))
    total = n * n + extra_vertices
    resolved = []
    for a, b in add:
        ua = a if isinstance(a, int) else gid(*a)
        ub = b if isinstance(b, int) else gid(*b)
        resolved.append(tuple(sorted((ua, ub))))
    edges |= set(resolved)
    g = Graph.from_edges(total, sorted(edges))
    part = {(i, j): (gid(i, j),) for i in range(1, n + 1) for j in range(1, n + 1)}
    return g, part, gid


def injected_certificates() -> dict[int, tuple[Graph, WidthCertificate]]:
    """One certificate per property, each violating only that property."""
    n = 5
    out = {}
    x, y = n * n, n * n + 1
    g, part, gid = _grid_host(extra_vertices=2, add=[(x, (1, 1)), (y, (1, 1))])
    out[1] = (g, part | {(1, 0): (x, y)})
    g, part, gid = _grid_host(extra_vertices=2, add=[(x, (1, 1)), (y, (1, 1))])
    out[2] = (g, part | {(0, 1): (x, y)})
    # the corner vertex moves to the left border, keeping only its row-1 edge
    g, part, gid = _grid_host(remove=[((1, 1), (2, 1))])
    part = dict(part)
    part[(1, 1)] = ()
    part[(1, 0)] = (gid(1, 1),)
    out[3] = (g, part)
    g, part, gid = _grid_host(remove=[((3, 2), (3, 3))])
    out[4] = (g, part)
    g, part, gid = _grid_host(remove=[((2, 3), (3, 3))])
    out[5] = (g, part)
    g, part, gid = _grid_host(extra_vertices=1, add=[(x, (1, 1)), (x, (2, 1))])
    out[6] = (g, part | {(1, 0): (x,)})
    g, part, gid = _grid_host(extra_vertices=1, add=[(x, (1, 1)), (x, (1, 2))])
    out[7] = (g, part | {(0, 1): (x,)})
    g, part, gid = _grid_host(add=[((1, 1), (3, 3))])
    out[8] = (g, part)
    return {p: (g, WidthCertificate(1, n, pt)) for p, (g, pt) in out.items()}


# the violation each injected certificate must report, (property, witness)
EXPECTED_WITNESS = {
    1: ((1, 0), (25, 26)),
    2: ((0, 1), (25, 26)),
    3: ((1, 1), ()),
    4: (3, (10, 11, 12, 13, 14)),
    5: (3, (2, 7, 12, 17, 22)),
    6: (25, (1, 0), 5, (2, 1)),
    7: (25, (0, 1), 1, (1, 2)),
    8: (0, (1, 1), 12, (3, 3)),
}

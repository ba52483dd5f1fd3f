"""Exhaustive corpora of small graphs up to isomorphism, cached as graph6.

Graphs of a hereditary family on ``n`` vertices are obtained by adding one
vertex, with every possible neighbourhood, to the family members on ``n - 1``
vertices and keeping one representative per canonical code.  Since every
member on ``n`` vertices loses a vertex to a member on ``n - 1``, this is
complete.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable

from .canon import canonical_code, canonical_graph
from .catalog import G
from .graph import Graph, from_graph6, is_connected, to_graph6
from .recognizers import is_h_free, is_split


def _all(g: Graph) -> bool:
    return True


def _split(g: Graph) -> bool:
    return is_split(g) is not None


def _in_class(g: Graph) -> bool:
    return is_h_free(g, [G("2P2"), G("coP2+P3")])


FAMILIES: dict[str, Callable[[Graph], bool]] = {
    "all": _all,
    "split": _split,
    "2p2_cop2p3_free": _in_class,
}


def corpus_dir() -> Path:
    env = os.environ.get("ATOMWIDTH_CORPUS_DIR")
    return Path(env) if env else Path.home() / ".cache" / "atomwidth"


def _extend(args: tuple[str, list[str]]) -> list[tuple]:
    family, parents = args
    pred = FAMILIES[family]
    out = {}
    for text in parents:
        g = from_graph6(text)
        n = g.n
        for nb in range(1 << n):
            rows = list(g.adj) + [nb]
            for v in range(n):
                if nb >> v & 1:
                    rows[v] |= 1 << n
            h = Graph(n + 1, tuple(rows))
            if not pred(h):
                continue
            code = canonical_code(h)
            if code not in out:
                out[code] = to_graph6(canonical_graph(h))
    return list(out.items())


def generate(family: str, n: int, parents: Iterable[Graph], jobs: int = 1) -> list[Graph]:
    """Members of ``family`` on ``n`` vertices, from all members on ``n - 1``."""
    texts = [to_graph6(p) for p in parents]
    if n == 1:
        return [Graph.empty(1)] if FAMILIES[family](Graph.empty(1)) else []
    chunks = max(1, min(len(texts), jobs * 8))
    batches = [(family, texts[i::chunks]) for i in range(chunks)]
    found: dict = {}
    if jobs > 1 and len(texts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_extend, batches))
    else:
        results = [_extend(b) for b in batches]
    for part in results:
        for code, text in part:
            found.setdefault(code, text)
    return [from_graph6(found[c]) for c in sorted(found)]


def graphs(family: str, n: int, jobs: int = 1, cache: bool = True) -> list[Graph]:
    """All members of ``family`` with exactly ``n`` vertices, one per isomorphism class."""
    if family not in FAMILIES:
        raise KeyError(f"unknown corpus family {family!r}")
    if n < 1:
        return []
    path = corpus_dir() / f"{family}_{n}.g6"
    if cache and path.exists():
        return [from_graph6(line) for line in path.read_text().split()]
    parents = graphs(family, n - 1, jobs, cache) if n > 1 else []
    out = generate(family, n, parents, jobs)
    if cache:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text("".join(to_graph6(g) + "\n" for g in out))
            tmp.replace(path)
        except OSError:
            pass
    return out


def graphs_up_to(family: str, max_n: int, jobs: int = 1, connected: bool = False) -> list[Graph]:
    out = []
    for n in range(1, max_n + 1):
        out += [g for g in graphs(family, n, jobs) if not connected or is_connected(g)]
    return out

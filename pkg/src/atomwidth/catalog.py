"""Named small graphs and a parser for their textual names.

Grammar (whitespace ignored)::

    name    := "co" name | sum
    sum     := term ("+" term)*
    term    := [count] atom | [count] "(" name ")"
    atom    := "P" t | "C" t | "K" t | "K" s "_" t | "S" h "_" i "_" j
             | "paw" | "diamond" | "gem" | "claw" | "bull"

``co`` complements everything to its right, so ``coP2+P3`` is the
complement of ``P2+P3``; use parentheses to complement a single summand,
e.g. ``(coP3)+P1``.  A leading count repeats a summand: ``3P1``, ``2P2``.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .graph import Graph, GraphError, complement, disjoint_union


def path(t: int) -> Graph:
    if t < 1:
        raise GraphError("paths need at least one vertex")
    return Graph.from_edges(t, [(i, i + 1) for i in range(t - 1)], f"P{t}")


def cycle(t: int) -> Graph:
    if t < 3:
        raise GraphError("cycles need at least three vertices")
    return Graph.from_edges(t, [(i, (i + 1) % t) for i in range(t)], f"C{t}")


def complete(t: int) -> Graph:
    return Graph.from_edges(t, [(i, j) for i in range(t) for j in range(i + 1, t)], f"K{t}")


def edgeless(t: int) -> Graph:
    return Graph.empty(t).named(f"{t}P1")


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)], f"K{s}_{t}")


def subdivided_claw(h: int, i: int, j: int) -> Graph:
    """Tree with centre 0 and three legs of lengths ``h, i, j``."""
    if min(h, i, j) < 1:
        raise GraphError("claw legs need length at least one")
    edges = []
    nxt = 1
    for length in (h, i, j):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges, f"S{h}_{i}_{j}")


def disjoint_sum(*parts: Graph) -> Graph:
    out = Graph.empty(0)
    for p in parts:
        out = disjoint_union(out, p)
    return out


def co(g: Graph) -> Graph:
    return complement(g)


_SPECIAL = {
    "paw": lambda: co(disjoint_sum(path(1), path(3))),
    "diamond": lambda: co(disjoint_sum(edgeless(2), path(2))),
    "gem": lambda: co(disjoint_sum(path(1), path(4))),
    "claw": lambda: complete_bipartite(1, 3),
    "bull": lambda: Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
}

_TOKEN = re.compile(r"\s*(co|paw|diamond|gem|claw|bull|[PCKS]|\d+|_|\+|\(|\))")


def _tokenize(text: str) -> list[str]:
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise GraphError(f"cannot parse graph name {text!r} at position {pos}")
        out.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise GraphError(f"malformed graph name {self.text!r}")
        self.i += 1
        return tok

    def number(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise GraphError(f"expected a number in {self.text!r}")
        return int(tok)

    def name(self) -> Graph:
        if self.peek() == "co":
            self.take()
            return co(self.name())
        return self.sum()

    def sum(self) -> Graph:
        g = self.term()
        while self.peek() == "+":
            self.take()
            g = disjoint_union(g, self.term())
        return g

    def term(self) -> Graph:
        count = 1
        if self.peek() is not None and self.peek().isdigit():
            count = self.number()
        if self.peek() == "(":
            self.take()
            base = self.name()
            self.take(")")
        else:
            base = self.atom()
        return disjoint_sum(*([base] * count))

    def atom(self) -> Graph:
        tok = self.take()
        if tok in _SPECIAL:
            return _SPECIAL[tok]()
        if tok == "P":
            return path(self.number())
        if tok == "C":
            return cycle(self.number())
        if tok == "K":
            s = self.number()
            if self.peek() == "_":
                self.take()
                return complete_bipartite(s, self.number())
            return complete(s)
        if tok == "S":
            h = self.number()
            self.take("_")
            i = self.number()
            self.take("_")
            return subdivided_claw(h, i, self.number())
        raise GraphError(f"unknown graph atom {tok!r} in {self.text!r}")


@lru_cache(maxsize=None)
def parse_graph_name(text: str) -> Graph:
    """Build the graph denoted by a catalog name such as ``coP2+P3``."""
    p = _Parser(text)
    g = p.name()
    if p.peek() is not None:
        raise GraphError(f"trailing input in graph name {text!r}")
    return g.named(text.replace(" ", ""))


def G(text: str) -> Graph:
    """Short alias of :func:`parse_graph_name`."""
    return parse_graph_name(text)


# Every graph named in the classification tables, written in catalog syntax.
NAMED = (
    "P1", "P2", "P3", "P4", "P5", "P6", "2P1", "3P1", "4P1", "5P1",
    "K3", "K4", "K5", "C4", "C5", "K1_3", "paw", "diamond", "gem",
    "P1+P3", "2P2", "P1+P4", "P2+P3", "P2+P4", "P1+P6", "2P1+P2", "2P1+P3",
    "K3+P1", "P1+2P2", "3P1+P2", "2P1+2P2", "2P1+P4", "4P1+P2", "3P2", "2P3",
    "K1_3+3P1", "K1_3+P2", "P1+P2+P3", "P1+P5", "P1+S1_1_2", "S1_1_3", "S1_2_2",
    "P1+S1_1_3", "S1_2_3",
    "coP5", "coP6", "co2P2", "coP2+P3", "coP2+P4", "co3P2", "coP1+2P2", "co3P1+P2",
    "co2P1+P3", "co2P1+2P2", "co2P1+P4", "co4P1+P2", "co2P3", "coP1+P2+P3", "coP1+P5",
    "coS1_2_3", "coP1+S1_1_3",
)

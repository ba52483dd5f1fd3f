"""Clique-width expressions, width-bounded builders, an exact solver and
the grid-partition lower-bound certificate checker.

Expressions are trees over four operations: create a vertex with a label,
disjoint union, join two distinct labels, relabel one label to another.
``width`` counts the distinct labels mentioned anywhere in the expression,
which is an upper bound on the clique-width of the evaluated graph.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union as _U

from .graph import Graph, GraphError, bits, component_masks, complement, mask_of, relabel
from .recognizers import ChainOrdering, is_bipartite_chain

# expressions -------------------------------------------------------------


class ExpressionError(ValueError):
    """Malformed expression text or an invalid operation."""


@dataclass(frozen=True)
class CreateVertex:
    label: int


@dataclass(frozen=True)
class Union:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Join:
    i: int
    j: int
    child: "Expr"

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ExpressionError(f"join needs two distinct labels, got {self.i} twice")


@dataclass(frozen=True)
class Relabel:
    i: int
    j: int
    child: "Expr"


Expr = _U[CreateVertex, Union, Join, Relabel]


def _children(e: Expr) -> tuple:
    if isinstance(e, Union):
        return (e.left, e.right)
    if isinstance(e, (Join, Relabel)):
        return (e.child,)
    return ()


def _postorder(e: Expr):
    stack = [(e, False)]
    while stack:
        node, done = stack.pop()
        if done:
            yield node
            continue
        stack.append((node, True))
        for c in reversed(_children(node)):
            stack.append((c, False))


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[int, ...]


def evaluate(e: Expr) -> LabeledGraph:
    """Evaluate ``e``; vertices are numbered in CreateVertex (left-to-right) order."""
    rows: list[int] = []
    labels: list[int] = []
    stack: list[dict[int, int]] = []
    for node in _postorder(e):
        if isinstance(node, CreateVertex):
            if node.label < 1:
                raise ExpressionError("labels must be positive")
            v = len(rows)
            rows.append(0)
            labels.append(node.label)
            stack.append({node.label: 1 << v})
        elif isinstance(node, Union):
            b = stack.pop()
            out = stack.pop()
            for lab, m in b.items():
                out[lab] = out.get(lab, 0) | m
            stack.append(out)
        elif isinstance(node, Join):
            cur = stack[-1]
            mi, mj = cur.get(node.i, 0), cur.get(node.j, 0)
            for v in bits(mi):
                rows[v] |= mj
            for v in bits(mj):
                rows[v] |= mi
        else:
            cur = stack[-1]
            if node.i != node.j and node.i in cur:
                moved = cur.pop(node.i)
                cur[node.j] = cur.get(node.j, 0) | moved
                for v in bits(moved):
                    labels[v] = node.j
    return LabeledGraph(Graph(len(rows), tuple(rows)), tuple(labels))


def eval_graph(e: Expr) -> Graph:
    return evaluate(e).graph


def width(e: Expr) -> int:
    used = set()
    for node in _postorder(e):
        if isinstance(node, CreateVertex):
            used.add(node.label)
        elif isinstance(node, (Join, Relabel)):
            used.update((node.i, node.j))
    return len(used)


def to_sexpr(e: Expr) -> str:
    stack: list[str] = []
    for node in _postorder(e):
        if isinstance(node, CreateVertex):
            stack.append(f"(v {node.label})")
        elif isinstance(node, Union):
            right = stack.pop()
            stack.append(f"(union {stack.pop()} {right})")
        elif isinstance(node, Join):
            stack.append(f"(join {node.i} {node.j} {stack.pop()})")
        else:
            stack.append(f"(relabel {node.i} {node.j} {stack.pop()})")
    return stack[0]


_SEXPR_TOKEN = re.compile(r"\s*(\(|\)|[A-Za-z]+|\d+)")


def parse_sexpr(text: str) -> Expr:
    """Parse the text produced by :func:`to_sexpr`."""
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _SEXPR_TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"unexpected character at {pos} in expression")
        toks.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    # each frame: [op, list of args]
    stack: list[list] = []
    result = None
    i = 0
    while i < len(toks):
        t = toks[i]
        if t == "(":
            if i + 1 >= len(toks):
                raise ExpressionError("truncated expression")
            stack.append([toks[i + 1], []])
            i += 2
            continue
        if t == ")":
            if not stack:
                raise ExpressionError("unbalanced parentheses")
            op, args = stack.pop()
            node = _make(op, args)
            if stack:
                stack[-1][1].append(node)
            elif result is None and i == len(toks) - 1:
                result = node
            else:
                raise ExpressionError("trailing input after expression")
            i += 1
            continue
        if not stack:
            raise ExpressionError("expression must start with '('")
        stack[-1][1].append(int(t) if t.isdigit() else t)
        i += 1
    if stack or result is None:
        raise ExpressionError("unbalanced parentheses")
    return result


def _make(op: str, args: list) -> Expr:
    def ints(k: int) -> list[int]:
        if len(args) < k or not all(isinstance(a, int) for a in args[:k]):
            raise ExpressionError(f"{op} expects {k} integer label(s)")
        return args[:k]

    if op == "v":
        if len(args) != 1:
            raise ExpressionError("v takes one label")
        (lab,) = ints(1)
        if lab < 1:
            raise ExpressionError("labels must be positive")
        return CreateVertex(lab)
    if op == "union":
        if len(args) != 2 or any(isinstance(a, (int, str)) for a in args):
            raise ExpressionError("union takes two subexpressions")
        return Union(args[0], args[1])
    if op in ("join", "relabel"):
        if len(args) != 3 or isinstance(args[2], (int, str)):
            raise ExpressionError(f"{op} takes two labels and a subexpression")
        i, j = ints(2)
        return Join(i, j, args[2]) if op == "join" else Relabel(i, j, args[2])
    raise ExpressionError(f"unknown operation {op!r}")


# builders ----------------------------------------------------------------


def _union_all(parts: Sequence[Expr]) -> Expr:
    acc = parts[0]
    for p in parts[1:]:
        acc = Union(acc, p)
    return acc


def build_edgeless(k: int) -> Expr:
    if k < 1:
        raise GraphError("need at least one vertex")
    return _union_all([CreateVertex(1)] * k)


def build_complete(k: int) -> Expr:
    """``K_k`` with labels 1 and 2; every vertex ends with label 1."""
    if k < 1:
        raise GraphError("need at least one vertex")
    e: Expr = CreateVertex(1)
    for _ in range(k - 1):
        e = Relabel(2, 1, Join(1, 2, Union(e, CreateVertex(2))))
    return e


def build_cograph(g: Graph) -> Expr:
    """Width-2 expression for a P4-free graph; all vertices end with label 1.

    Uses the cotree: components are unioned, co-components are joined.
    """
    if g.n == 0:
        raise GraphError("need at least one vertex")
    co = complement(g)

    def build(mask: int) -> Expr:
        if mask & (mask - 1) == 0:
            return CreateVertex(1)
        comps = component_masks(g, mask)
        if len(comps) > 1:
            return _union_all([build(c) for c in comps])
        cocomps = component_masks(co, mask)
        if len(cocomps) == 1:
            raise GraphError("graph contains an induced P4; it is not a cograph")
        acc = build(cocomps[0])
        for c in cocomps[1:]:
            acc = Relabel(2, 1, Join(1, 2, Union(acc, Relabel(1, 2, build(c)))))
        return acc

    return build(g.full_mask)


def build_bipartite_chain(g: Graph, ordering: ChainOrdering | None = None) -> Expr:
    """Width-3 expression for a bipartite chain graph.

    Top vertices are added from smallest to largest neighbourhood.  Bottom
    vertices wait with label 2; each new top vertex gets label 3, is joined
    to everything labelled 2 (exactly its neighbourhood, by nestedness) and
    is then retired to label 1.
    """
    if g.n == 0:
        raise GraphError("need at least one vertex")
    if ordering is None:
        ordering = is_bipartite_chain(g)
        if ordering is None:
            raise GraphError("graph is not a bipartite chain graph")
    acc: Expr | None = None
    pool = 0

    def add(e: Expr) -> None:
        nonlocal acc
        acc = e if acc is None else Union(acc, e)

    for x in reversed(ordering.top):
        nb = g.adj[x]
        if not nb:
            add(CreateVertex(1))
            continue
        if pool & ~nb:
            raise GraphError("neighbourhoods are not nested")
        for y in bits(nb & ~pool):
            add(CreateVertex(2))
        pool |= nb
        add(CreateVertex(3))
        acc = Relabel(3, 1, Join(3, 2, acc))
    for y in ordering.bottom:
        if not pool >> y & 1:
            if g.adj[y]:
                raise GraphError("neighbourhoods are not nested")
            add(CreateVertex(1))
    assert acc is not None
    return acc


# exact clique-width ------------------------------------------------------


class BudgetExceeded(RuntimeError):
    """Raised when no expression of width within the budget exists."""

    def __init__(self, budget: int):
        super().__init__(f"> {budget}")
        self.budget = budget


@dataclass
class _Solver:
    g: Graph
    k: int
    memo: dict[int, object] = field(default_factory=dict)
    classes_memo: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def classes(self, s: int) -> tuple[int, ...]:
        """Vertices of ``s`` grouped by their neighbourhood outside ``s``."""
        got = self.classes_memo.get(s)
        if got is None:
            out = ~s
            groups: dict[int, int] = {}
            for v in bits(s):
                key = self.g.adj[v] & out
                groups[key] = groups.get(key, 0) | 1 << v
            got = tuple(sorted(groups.values()))
            self.classes_memo[s] = got
        return got

    def share_ok(self, s: int, s1: int, p1, p2, pairs) -> bool:
        adj = self.g.adj
        out = ~s
        groups: list[int] = []
        used1 = used2 = 0
        for a, b in pairs:
            x1, x2 = p1[a], p2[b]
            key = adj[x1.bit_length() - 1] & out
            for v in bits(x1 | x2):
                if adj[v] & out != key:
                    return False
            for v in bits(x1):
                if adj[v] & x2:
                    return False
            groups.append(x1 | x2)
            used1 |= 1 << a
            used2 |= 1 << b
        groups += [p1[a] for a in range(len(p1)) if not used1 >> a & 1]
        groups += [p2[b] for b in range(len(p2)) if not used2 >> b & 1]
        return self.joins_ok(s1, s & ~s1, groups)

    def joins_ok(self, s1: int, s2: int, groups: list[int]) -> bool:
        adj = self.g.adj
        for ia in range(len(groups)):
            a = groups[ia]
            for ib in range(ia + 1, len(groups)):
                b = groups[ib]
                cross = False
                for v in bits(a & s1):
                    if adj[v] & b & s2:
                        cross = True
                        break
                if not cross:
                    for v in bits(a & s2):
                        if adj[v] & b & s1:
                            cross = True
                            break
                if cross:
                    for v in bits(a):
                        if adj[v] & b != b:
                            return False
        return True

    def feasible(self, s: int):
        """``None`` if ``G[s]`` cannot be built, else a witness split."""
        if s in self.memo:
            return self.memo[s]
        result = None
        if len(self.classes(s)) <= self.k:
            if s & (s - 1) == 0:
                result = ("leaf",)
            else:
                low = s & -s
                rest = s & ~low
                sub = rest
                while True:
                    # s1 always contains the lowest vertex; s2 non-empty
                    s1 = low | sub
                    s2 = s & ~s1
                    if s2:
                        found = self.try_split(s, s1, s2)
                        if found is not None:
                            result = found
                            break
                    if sub == 0:
                        break
                    sub = (sub - 1) & rest
        self.memo[s] = result
        return result

    def try_split(self, s: int, s1: int, s2: int):
        p1, p2 = self.classes(s1), self.classes(s2)
        if len(p1) > self.k or len(p2) > self.k:
            return None
        need = len(p1) + len(p2) - self.k
        pairing = None
        if need <= 0:
            pairing = ()
        else:
            for left in itertools.combinations(range(len(p1)), need):
                for right in itertools.permutations(range(len(p2)), need):
                    pairs = tuple(zip(left, right))
                    if self.share_ok(s, s1, p1, p2, pairs):
                        pairing = pairs
                        break
                if pairing is not None:
                    break
        if pairing is None:
            return None
        if self.feasible(s1) is None or self.feasible(s2) is None:
            return None
        return ("split", s1, s2, pairing)

    def build(self, s: int, want: Mapping[int, int], leaves: list[int]) -> Expr:
        """Expression for ``G[s]`` in which class ``c`` of ``s`` carries ``want[c]``."""
        plan = self.memo[s]
        if plan[0] == "leaf":
            leaves.append(s.bit_length() - 1)
            return CreateVertex(want[s])
        _, s1, s2, pairing = plan
        p1, p2 = self.classes(s1), self.classes(s2)
        groups: list[int] = []
        paired1 = {a for a, _ in pairing}
        paired2 = {b for _, b in pairing}
        for a, b in pairing:
            groups.append(p1[a] | p2[b])
        groups += [p1[a] for a in range(len(p1)) if a not in paired1]
        groups += [p2[b] for b in range(len(p2)) if b not in paired2]
        cls = self.classes(s)
        owner = {}
        for gi, grp in enumerate(groups):
            owner[gi] = next(c for c in cls if grp & c == grp)
        label = {}
        taken = set(want.values())
        spare = iter(sorted(set(range(1, self.k + 1)) - taken))
        designated = set()
        for gi in range(len(groups)):
            c = owner[gi]
            if c not in designated:
                designated.add(c)
                label[gi] = want[c]
            else:
                label[gi] = next(spare)
        want1, want2 = {}, {}
        for gi, grp in enumerate(groups):
            for c in p1:
                if c & grp:
                    want1[c] = label[gi]
            for c in p2:
                if c & grp:
                    want2[c] = label[gi]
        e: Expr = Union(self.build(s1, want1, leaves), self.build(s2, want2, leaves))
        for ia in range(len(groups)):
            for ib in range(ia + 1, len(groups)):
                a, b = groups[ia], groups[ib]
                if any(self.g.adj[v] & b & s2 for v in bits(a & s1)) or any(
                    self.g.adj[v] & b & s1 for v in bits(a & s2)
                ):
                    e = Join(label[ia], label[ib], e)
        for gi in range(len(groups)):
            target = want[owner[gi]]
            if label[gi] != target:
                e = Relabel(label[gi], target, e)
        return e


def cwd_expression_at_most(g: Graph, k: int) -> Expr | None:
    """A verified expression of width at most ``k`` for ``g``, or ``None``."""
    if g.n == 0:
        raise GraphError("the null graph has no expression")
    solver = _Solver(g, k)
    if solver.feasible(g.full_mask) is None:
        return None
    leaves: list[int] = []
    e = solver.build(g.full_mask, {g.full_mask: 1}, leaves)
    built = eval_graph(e)
    perm = [0] * g.n
    for pos, v in enumerate(leaves):
        perm[pos] = v
    if relabel(built, perm) != g or width(e) > k:
        raise AssertionError("exact solver produced an invalid witness")
    return e


def exact_cliquewidth(g: Graph, budget: int = 6) -> int:
    """Minimum number of labels of an expression building ``g``.

    The search keeps, for each vertex subset ``S``, the coarsest labelling
    compatible with the rest of the graph (vertices of ``S`` grouped by their
    neighbourhood outside ``S``) and asks whether ``G[S]`` splits into two
    buildable parts that can be merged with at most ``k`` labels.  Raises
    :class:`BudgetExceeded` if the width exceeds ``budget``.
    """
    if g.n == 0:
        return 0
    for k in range(1, budget + 1):
        if cwd_expression_at_most(g, k) is not None:
            return k
    raise BudgetExceeded(budget)


def bound_after_transcript(residual_width: int, transcript) -> dict:
    """Symbolic record of a width bound after undoing transcript steps.

    Each vertex deletion, subgraph complementation and bipartite
    complementation preserves boundedness of clique-width, but the numeric
    blow-up factors are not modelled here; the record lists what a numeric
    bound would depend on.
    """
    counts = dict(getattr(transcript, "counts", transcript))
    return {
        "residual_width": residual_width,
        "deletions": counts.get("DeleteVertex", 0),
        "subgraph_complementations": counts.get("SubgraphComplement", 0),
        "bipartite_complementations": counts.get("BipartiteComplement", 0),
        "numeric_bound": None,
    }


# lower-bound certificates ------------------------------------------------


class CertificateError(ValueError):
    """Raised when a certificate is not a partition of the vertex set."""


@dataclass(frozen=True)
class WidthCertificate:
    """Partition ``{(i, j): vertices}`` with ``i, j`` in ``0..n``; missing keys are empty."""

    m: int
    n: int
    partition: Mapping[tuple[int, int], tuple[int, ...]]

    def cell(self, i: int, j: int) -> tuple[int, ...]:
        return tuple(self.partition.get((i, j), ()))


@dataclass(frozen=True)
class Violation:
    prop: int
    witness: tuple

    def to_json(self) -> dict:
        return {"property": self.prop, "witness": [list(w) if isinstance(w, tuple) else w for w in self.witness]}


@dataclass(frozen=True)
class CertificateResult:
    bound: int | None
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_certificate(g: Graph, cert: WidthCertificate) -> CertificateResult:
    """Check the eight partition properties; return the bound or the violations.

    Witness formats: properties 1-3 give ``((i, j), cell)``; 4-5 give the
    row/column index and the vertex set; 6-8 give the two adjacent vertices
    with their cells.
    """
    m, n = cert.m, cert.n
    if m < 0 or n <= m + 1:
        raise CertificateError("need m >= 0 and n > m + 1")
    where: dict[int, tuple[int, int]] = {}
    for key, cell in cert.partition.items():
        i, j = key
        if not (0 <= i <= n and 0 <= j <= n):
            raise CertificateError(f"cell index {key} out of range")
        for v in cell:
            if not 0 <= v < g.n:
                raise CertificateError(f"vertex {v} out of range")
            if v in where:
                raise CertificateError(f"vertex {v} appears in two cells")
            where[v] = (i, j)
    if len(where) != g.n:
        missing = sorted(set(range(g.n)) - set(where))
        raise CertificateError(f"vertices {missing} are not covered")
    rng = range(1, n + 1)
    bad: list[Violation] = []
    for i in rng:
        if len(cert.cell(i, 0)) > 1:
            bad.append(Violation(1, ((i, 0), cert.cell(i, 0))))
    for j in rng:
        if len(cert.cell(0, j)) > 1:
            bad.append(Violation(2, ((0, j), cert.cell(0, j))))
    for i in rng:
        for j in rng:
            if not cert.cell(i, j):
                bad.append(Violation(3, ((i, j), ())))
    for i in rng:
        row = mask_of(v for j in range(n + 1) for v in cert.cell(i, j))
        if len(component_masks(g, row)) != 1:
            bad.append(Violation(4, (i, tuple(bits(row)))))
    for j in rng:
        col = mask_of(v for i in range(n + 1) for v in cert.cell(i, j))
        if len(component_masks(g, col)) != 1:
            bad.append(Violation(5, (j, tuple(bits(col)))))
    for u, v in g.edges():
        for a, b in ((u, v), (v, u)):
            (ka, la), (i, j) = where[a], where[b]
            if la == 0 and ka >= 1 and i >= 1 and j >= 1 and not i <= ka:
                bad.append(Violation(6, (a, (ka, 0), b, (i, j))))
            if ka == 0 and la >= 1 and i >= 1 and j >= 1 and not j <= la:
                bad.append(Violation(7, (a, (0, la), b, (i, j))))
        (i, j), (k, l) = where[u], where[v]
        if min(i, j, k, l) >= 1 and (abs(k - i) > m or abs(l - j) > m):
            bad.append(Violation(8, (u, (i, j), v, (k, l))))
    if bad:
        return CertificateResult(None, tuple(bad))
    return CertificateResult((n - 1) // (m + 1) + 1, ())

"""Command-line entry point.

Exit codes: 0 success / property holds, 1 property fails (witness printed),
2 usage error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .catalog import G
from .classify import ClassificationGap, classify
from .constructions import CONSTRUCTIONS, build, verify_claims
from .cwd import (
    BudgetExceeded,
    CertificateError,
    WidthCertificate,
    check_certificate,
    cwd_expression_at_most,
    exact_cliquewidth,
    to_sexpr,
    width,
)
from .decompose import InternalClaimViolation, NotAtom, NotInClass, decompose
from .graph import Graph, GraphError, from_graph6, is_connected, parse_edgelist, to_edgelist, to_graph6
from .recognizers import find_clique_cutset, witness_or_none

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def read_graph_text(text: str) -> Graph:
    """Edge list (``n m`` header) or a single graph6 line."""
    stripped = text.strip()
    if stripped and len(stripped.split()) == 1 and not stripped.isdigit():
        return from_graph6(stripped)
    return parse_edgelist(text)


def load_graph(spec: str) -> Graph:
    if spec == "-":
        return read_graph_text(sys.stdin.read())
    path = Path(spec)
    if not path.exists():
        raise UsageError(f"no such file: {spec}")
    return read_graph_text(path.read_text())


def graph_arg(spec: str) -> Graph:
    """A catalog name, or a path to an edge-list / graph6 file."""
    if Path(spec).exists():
        return load_graph(spec)
    try:
        return G(spec)
    except GraphError as exc:
        raise UsageError(f"{spec!r} is neither a file nor a graph name ({exc})") from None


def load_certificate(spec: str) -> WidthCertificate:
    try:
        data = json.loads(Path(spec).read_text())
        part = {tuple(c["cell"]): tuple(c["vertices"]) for c in data["cells"]}
        return WidthCertificate(int(data["m"]), int(data["n"]), part)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad certificate file {spec}: {exc}") from None


def _emit(args: argparse.Namespace, data: dict, lines: Sequence[str] | None = None) -> None:
    if getattr(args, "pretty", False) and lines is not None:
        print("\n".join(lines))
    else:
        print(json.dumps(data, indent=2 if getattr(args, "pretty", False) else None, sort_keys=True))


# subcommands ---------------------------------------------------------------


def cmd_generate(args: argparse.Namespace) -> int:
    if args.family == "list":
        for cid, c in CONSTRUCTIONS.items():
            print(f"{cid}\t{c.param_name} in {list(c.params)}\tfree of {', '.join(c.claimed_free) or '-'}")
        return EXIT_OK
    if args.family not in CONSTRUCTIONS:
        raise UsageError(f"unknown family {args.family!r}; try 'generate list'")
    param = args.param if args.param_opt is None else args.param_opt
    if param is None:
        raise UsageError("generate needs a parameter")
    if args.selftest:
        report = verify_claims(args.family, param)
        lines = [f"{report['id']}({param}): n={report['n']} m={report['m']} atom={report['atom']}"]
        lines += [f"  {h}-free: {'yes' if w is None else 'no, at ' + str(w)}" for h, w in report["free"].items()]
        lines += [f"  {name}: {val}" for name, val in report["extra"].items()]
        _emit(args, report, lines)
        return EXIT_OK if report["ok"] else EXIT_FAIL
    g = build(args.family, param)
    text = to_graph6(g) + "\n" if args.format == "graph6" else to_edgelist(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    out: dict = {"n": g.n, "m": g.m}
    failed = False
    if args.free:
        names = [s for s in args.free.split(",") if s]
        free = {}
        for name in names:
            h = graph_arg(name)
            hit = witness_or_none(g, [h])
            free[name] = None if hit is None else list(hit[1])
            failed |= hit is not None
        out["free"] = free
    if args.atom:
        cut = find_clique_cutset(g) if g.n else None
        atom = is_connected(g) and cut is None
        out["atom"] = atom
        out["cutset"] = None if cut is None else list(cut.vertices)
        failed |= not atom
    lines = [f"n={g.n} m={g.m}"]
    for name, w in out.get("free", {}).items():
        lines.append(f"{name}-free: {'yes' if w is None else 'no, at ' + str(w)}")
    if "atom" in out:
        lines.append(f"atom: {'yes' if out['atom'] else 'no, clique cut-set ' + str(out['cutset'])}")
    _emit(args, out, lines)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    v = classify(graph_arg(args.h1), graph_arg(args.h2), args.scope)
    data = v.to_json()
    lines = [f"{v.scope.value}: ({v.h1}, {v.h2}) -> {v.outcome.value} [{v.clause}] {v.clause_text}"]
    if v.construction:
        lines.append(f"construction: {v.construction}")
    _emit(args, data, lines)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    try:
        t = decompose(g)
    except NotInClass as exc:
        _emit(args, {"error": "NotInClass", "pattern": exc.pattern, "witness": list(exc.witness)}, [str(exc)])
        return EXIT_FAIL
    except NotAtom as exc:
        _emit(args, {"error": "NotAtom", "cutset": list(exc.cutset)}, [str(exc)])
        return EXIT_FAIL
    data = t.to_json()
    lines = [f"route {t.route}, counts {t.counts}"]
    lines += [f"  {s.kind.value} {list(s.payload)}" for s in t.steps]
    lines += [f"  residual on {list(r.vertices)}: width {r.width}" for r in t.residuals]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_cwd(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    try:
        k = exact_cliquewidth(g, args.budget)
    except BudgetExceeded as exc:
        _emit(args, {"cliquewidth": None, "exceeds": exc.budget}, [f"clique-width > {exc.budget}"])
        return EXIT_FAIL
    e = cwd_expression_at_most(g, k) if g.n else None
    data = {"cliquewidth": k, "expr": None if e is None else to_sexpr(e), "width": 0 if e is None else width(e)}
    _emit(args, data, [f"clique-width {k}"] + ([to_sexpr(e)] if e is not None else []))
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    cert = load_certificate(args.partition)
    try:
        r = check_certificate(g, cert)
    except CertificateError as exc:
        raise UsageError(str(exc)) from None
    data = {"ok": r.ok, "bound": r.bound, "violations": [v.to_json() for v in r.violations]}
    lines = [f"clique-width >= {r.bound}"] if r.ok else [f"property {v.prop} violated: {v.witness}" for v in r.violations]
    _emit(args, data, lines)
    return EXIT_OK if r.ok else EXIT_FAIL


def cmd_selftest(args: argparse.Namespace) -> int:
    from . import suites

    n = args.corpus_max_n
    runs = [
        lambda: suites.chain_suite(),
        lambda: suites.split_suite(max(n, 1), args.jobs),
        lambda: suites.decompose_suite(n, args.jobs),
        lambda: suites.meta_suite(min(n, 6)),
        lambda: suites.classifier_suite(min(n, 5)),
    ]
    results = [run() for run in runs]
    data = {"ok": all(r.ok for r in results), "suites": [r.to_json() for r in results]}
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.checked} checked in {r.seconds:.1f}s" for r in results]
    for r in results:
        lines += [f"  {f}" for f in r.failures[:5]]
    _emit(args, data, lines)
    return EXIT_OK if data["ok"] else EXIT_FAIL


# parser --------------------------------------------------------------------


def _param_value(text: str) -> int:
    value = text.split("=", 1)[-1]
    if not value.strip().isdigit():
        raise argparse.ArgumentTypeError(f"expected NAME=INT, got {text!r}")
    return int(value)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    p = _Parser(prog="atomwidth", description="Clique-width tools for atoms of bigenic graph classes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("generate", parents=[common], help="build a construction graph")
    s.add_argument("family", help="construction id, or 'list'")
    s.add_argument("param", nargs="?", type=int)
    s.add_argument("--param", dest="param_opt", type=_param_value, metavar="NAME=VALUE", help="e.g. n=3")
    s.add_argument("--selftest", action="store_true", help="check the claimed properties instead of printing")
    s.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("check", parents=[common], help="H-freeness and atom recognition")
    s.add_argument("--free", help="comma-separated graph names or files")
    s.add_argument("--atom", action="store_true", help="test for a clique cut-set")
    s.add_argument("graph", help="edge-list or graph6 file, '-' for stdin")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("classify", parents=[common], help="classify an (H1, H2) pair")
    s.add_argument("--h1", required=True)
    s.add_argument("--h2", required=True)
    s.add_argument("--scope", choices=["atoms", "general"], default="atoms")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("decompose", parents=[common], help="decompose a (2P2, co(P2+P3))-free atom")
    s.add_argument("graph")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("cwd", parents=[common], help="exact clique-width of a small graph")
    s.add_argument("--exact", dest="graph", required=True, metavar="FILE")
    s.add_argument("--budget", type=int, default=6)
    s.set_defaults(func=cmd_cwd)

    s = sub.add_parser("certify", parents=[common], help="check a grid-partition lower-bound certificate")
    s.add_argument("--lemma4", dest="graph", required=True, metavar="GRAPH")
    s.add_argument("partition", help="JSON file {m, n, cells: [{cell: [i, j], vertices: [...]}]}")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("selftest", parents=[common], help="run the exhaustive property suites")
    s.add_argument("--corpus-max-n", type=int, default=7)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = make_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalClaimViolation, ClassificationGap) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GraphError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

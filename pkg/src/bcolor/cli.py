"""Command-line interface.

Exit codes:
    0  success
    1  I/O or parse error
    2  input left the graph class (structure violation, palette exhausted)
    3  verification or structure check failed
    4  exact search ran out of node budget
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import __version__
from .engine import color, coloring_from_dict
from .errors import BColorError, ClassViolation, ParseError, PartialColoring
from .exact import DEFAULT_BUDGET, BudgetExceeded, solve_exact
from .generators import GenSpec
from .graph import GRAPH_CLASSES, Graph, format_dimacs, parse_dimacs
from .verify import check_conflict_bound, check_structure, verify_b_coloring

EXIT_OK = 0
EXIT_IO = 1
EXIT_CLASS = 2
EXIT_INVALID = 3
EXIT_BUDGET = 4

log = logging.getLogger("bcolor")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write_text(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w") as fh:
            fh.write(text)


def graph_to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edge_list()]}) + "\n"


def parse_graph(text: str) -> Graph:
    """DIMACS-style text, or JSON ``{"n": .., "edges": [[u, v], ..]}`` (0-based)."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
            return Graph(int(data["n"]), ((int(u), int(v)) for u, v in data["edges"]))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad JSON graph: {exc}") from exc
    return parse_dimacs(text)


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def cmd_color(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    t0 = time.perf_counter()
    result = color(g, args.graph_class, args.palette)
    log.info(
        "colored n=%d m=%d with %d/%d colors in %.3fs",
        g.n, g.m, result.colors_used, result.palette_size, time.perf_counter() - t0,
    )
    if args.trace:
        _write_text(result.trace.to_text(), args.trace)
    _write_text(result.to_json(), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        col = coloring_from_dict(json.loads(_read_text(args.coloring)))
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad coloring JSON: {exc}") from exc
    extra = set(col.assignment) - g.edges
    if extra:
        raise ParseError(f"coloring mentions {len(extra)} edges not in the graph")
    report = verify_b_coloring(g, col)
    _write_text(report.to_json(), args.out)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_exact(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        res = solve_exact(g, args.budget)
    except BudgetExceeded as exc:
        if args.format == "json":
            _write_text(json.dumps({"interval": [exc.lo, exc.hi]}) + "\n", args.out)
        else:
            _write_text(f"[{exc.lo},{exc.hi}]\n", args.out)
        return EXIT_BUDGET
    log.info("q_B=%d after %d search nodes", res.value, res.nodes)
    if args.format == "json":
        _write_text(json.dumps({"q_B": res.value, "nodes": res.nodes}) + "\n", args.out)
    else:
        _write_text(f"{res.value}\n", args.out)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec.parse(args.family, seed=args.seed, keep_prob=args.keep_prob)
    g = spec.build()
    if args.format == "json":
        _write_text(graph_to_json(g), args.out)
    else:
        comment = f"{args.family} seed={args.seed} keep_prob={args.keep_prob}"
        _write_text(format_dimacs(g, comment), args.out)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = check_structure(g, args.graph_class)
    payload = report.to_dict()
    if args.graph_class == "planar":
        violations = check_conflict_bound(g)
        payload["conflict_bound_violations"] = [
            {"edge": list(v.edge), "conflicts": v.conflicts, "bound": v.bound}
            for v in violations
        ]
        payload["ok"] = payload["ok"] and not violations
    _write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    return EXIT_OK if payload["ok"] else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcolor",
        description="B-colorings (proper edge colorings with rainbow 4-cycles) "
        "of planar and outerplanar graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="graph file (DIMACS-style or JSON), '-' for stdin")

    def add_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", "-o", default=None, help="output file (default stdout)")

    def add_class(p: argparse.ArgumentParser) -> None:
        p.add_argument("--class", dest="graph_class", choices=GRAPH_CLASSES, required=True)

    p = sub.add_parser("color", help="B-color a graph within the class palette")
    add_graph(p)
    add_class(p)
    p.add_argument("--palette", type=int, default=None,
                   help="palette size, at least the guaranteed one")
    p.add_argument("--trace", default=None, help="write the elimination trace here")
    add_out(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring JSON against a graph")
    add_graph(p)
    p.add_argument("coloring", help="coloring JSON as written by 'color'")
    add_out(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact B-chromatic index of a small graph")
    add_graph(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_out(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen", help="generate a named or random graph")
    p.add_argument("family", help="e.g. fig1a, k2d(6), cycle(7), max_planar(50)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--keep-prob", type=float, default=1.0,
                   help="keep each edge with this probability")
    p.add_argument("--format", choices=("dimacs", "json"), default="dimacs")
    add_out(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="structural checks and conflict-bound audit")
    add_graph(p)
    add_class(p)
    add_out(p)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=os.environ.get("BCOLOR_LOG", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "palette", None) is not None and args.palette < 1:
        parser.error("--palette must be positive")
    try:
        return args.func(args)
    except ClassViolation as exc:
        print(f"bcolor: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except (OSError, ParseError, PartialColoring) as exc:
        print(f"bcolor: {exc}", file=sys.stderr)
        return EXIT_IO
    except (BColorError, ValueError) as exc:
        print(f"bcolor: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

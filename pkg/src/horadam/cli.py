"""Command line interface: ``horadam <command> ...``.

Exit status: 0 success, 1 a check failed, 2 usage error, 3 a size cap was hit.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import config
from .errors import HoradamError, InternalError, ParameterError, ResourceLimitError, TheoremViolation
from .export import FORMATS, to_dot
from .graph import build_graph
from .hamilton import NoCycle, hamiltonian_cycle, hamiltonian_path, path_endpoints
from .reference import EDGE_POLYNOMIALS
from .sequences import (
    cube_coefficients,
    cube_number,
    cube_polynomial,
    degree_rows,
    edge_count,
    edge_counts,
    vertex_count,
)
from .series import GENERATING_FUNCTIONS, expand_named
from .verify import SUITES, Grid, run_suite
from .words import Params, render_word

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

COUNT_KINDS = ("vertices", "edges", "degrees", "cubes", "cube-number")


def _int_range(text: str) -> tuple[int, ...]:
    """'1:3' -> (1, 2, 3); '2' -> (2,)."""
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI or an integer, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 1 <= LO <= HI")
    return tuple(range(lo, hi + 1))


def _add_params(sub: argparse.ArgumentParser, with_n: bool = True) -> None:
    sub.add_argument("--a", type=int, required=True, help="letters without a 0 prefix (a >= 1)")
    sub.add_argument("--b", type=int, required=True, help="letters that must follow 0 (b >= 1)")
    if with_n:
        sub.add_argument("--n", type=int, required=True, help="word length (n >= 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horadam", description="Horadam cubes: counts, graphs, paths and checks."
    )
    subs = parser.add_subparsers(dest="command", required=True)

    count = subs.add_parser("count", help="exact counts for one (a, b, n)")
    _add_params(count)
    count.add_argument("--what", choices=COUNT_KINDS, required=True)

    graph = subs.add_parser("graph", help="export the graph")
    _add_params(graph)
    graph.add_argument("--format", choices=sorted(FORMATS), default="edgelist")
    graph.add_argument("--color", action="store_true", help="DOT only: color vertices by the bipartition")
    graph.add_argument("--cap", type=int, default=config.VERTEX_CAP, help="vertex cap")

    ham = subs.add_parser("hamilton", help="Hamiltonian path, or cycle with --cycle")
    _add_params(ham)
    ham.add_argument("--cycle", action="store_true")
    ham.add_argument("--cap", type=int, default=config.VERTEX_CAP, help="vertex cap")

    series = subs.add_parser("series", help="expand a generating function")
    _add_params(series, with_n=False)
    series.add_argument("--which", choices=sorted(GENERATING_FUNCTIONS), required=True)
    series.add_argument("--order", type=int, default=config.SERIES_ORDER, help="number of x terms")
    series.add_argument("--order-y", type=int, default=config.SERIES_ORDER, help="number of y terms")

    tables = subs.add_parser("tables", help="edge, degree and cube tables for given a, b")
    _add_params(tables, with_n=False)
    tables.add_argument("--max-n", type=int, default=6)

    verify = subs.add_parser("verify", help="run verification suites, print a JSON report")
    verify.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    verify.add_argument("--max-n", type=int, default=6)
    verify.add_argument("--a-range", type=_int_range, default=(1, 2, 3))
    verify.add_argument("--b-range", type=_int_range, default=(1, 2, 3))
    verify.add_argument(
        "--timing", action="store_true", help="include wall-clock duration (output then varies)"
    )
    return parser


# Commands --------------------------------------------------------------------


def _params(args: argparse.Namespace) -> Params:
    return Params(args.a, args.b, args.n)


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    p = _params(args)
    if args.what == "vertices":
        print(vertex_count(p), file=out)
    elif args.what == "edges":
        print(edge_count(p), file=out)
    elif args.what == "degrees":
        row = degree_rows(p.a, p.b, p.n)[p.n]
        print(" ".join(f"{k}:{v}" for k, v in sorted(row.items())), file=out)
    elif args.what == "cubes":
        print(" ".join(map(str, cube_coefficients(p).as_list())), file=out)
    else:
        print(cube_number(p), file=out)
    return EXIT_OK


def cmd_graph(args: argparse.Namespace, out: TextIO) -> int:
    g = build_graph(_params(args), args.cap)
    text = to_dot(g, color=True) if args.format == "dot" and args.color else FORMATS[args.format](g)
    out.write(text)
    return EXIT_OK


def cmd_hamilton(args: argparse.Namespace, out: TextIO) -> int:
    p = _params(args)
    if args.cycle:
        result = hamiltonian_cycle(p, cap=args.cap)
        if isinstance(result, NoCycle):
            print(f"{result.status}: {result.reason}", file=out)
            return EXIT_OK
        g = build_graph(p, args.cap)
        print(f"# cycle a={p.a} b={p.b} n={p.n} length={len(result)}", file=out)
    else:
        g = build_graph(p, args.cap)
        result = hamiltonian_path(p, g, cap=args.cap)
        first, last = path_endpoints(p).oriented()
        print(
            f"# path a={p.a} b={p.b} n={p.n} length={len(result)} "
            f"from={render_word(first, p)} to={render_word(last, p)}",
            file=out,
        )
    for i in result.vertices:
        print(render_word(g.vertices[i], p), file=out)
    return EXIT_OK


def _trim(row: list[int]) -> list[int]:
    while len(row) > 1 and row[-1] == 0:
        row = row[:-1]
    return row


def cmd_series(args: argparse.Namespace, out: TextIO) -> int:
    s = expand_named(args.which, args.a, args.b, args.order, args.order_y)
    if s.variables == 1:
        print(" ".join(map(str, s.as_list())), file=out)
    else:
        for i in range(s.order_x):
            print(f"x^{i}: " + " ".join(map(str, _trim(s.row(i)))), file=out)
    return EXIT_OK


def cmd_tables(args: argparse.Namespace, out: TextIO) -> int:
    a, b, max_n = args.a, args.b, args.max_n
    if max_n < 0:
        raise ParameterError("--max-n must be non-negative")
    Params(a, b, 0)  # validates a and b
    e = edge_counts(a, b, max_n)
    print(f"edges e_n, a={a} b={b}", file=out)
    print("n\te_n\tpolynomial", file=out)
    for n in range(1, max_n + 1):
        poly = EDGE_POLYNOMIALS.get(n)
        value = "" if poly is None else str(sum(c * a**i * b**j for (i, j), c in poly.items()))
        print(f"{n}\t{e[n]}\t{value}", file=out)

    rows = degree_rows(a, b, max_n)
    width = max((max(r) for r in rows if r), default=0)
    print(f"\ndegrees Delta_(n,k), a={a} b={b}", file=out)
    print("n\\k\t" + "\t".join(str(k) for k in range(width + 1)), file=out)
    for n in range(1, max_n + 1):
        print(f"{n}\t" + "\t".join(str(rows[n].get(k, 0)) for k in range(width + 1)), file=out)

    print(f"\ncube polynomials, a={a} b={b}", file=out)
    for n in range(max_n + 1):
        print(f"{n}\t{cube_polynomial(Params(a, b, n))}", file=out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.max_n < 0:
        raise ParameterError("--max-n must be non-negative")
    report = run_suite(args.suite, Grid(args.a_range, args.b_range, args.max_n), timing=args.timing)
    out.write(report.to_json())
    return EXIT_OK if report.passed else EXIT_CHECK


COMMANDS = {
    "count": cmd_count,
    "graph": cmd_graph,
    "hamilton": cmd_hamilton,
    "series": cmd_series,
    "tables": cmd_tables,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except ParameterError as exc:
        print(f"horadam: error: {exc}", file=err)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"horadam: resource limit: {exc}", file=err)
        return EXIT_RESOURCE
    except (TheoremViolation, InternalError) as exc:
        print(f"horadam: check failed: {exc}", file=err)
        return EXIT_CHECK
    except HoradamError as exc:
        print(f"horadam: {exc}", file=err)
        return EXIT_CHECK


def main() -> None:
    sys.exit(run())

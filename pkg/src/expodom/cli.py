"""Command-line interface.

Subcommands: compute, enumerate, tau, family, verify, conjecture, fixture.
All results are JSON on stdout (rationals as {"num", "den"} decimal strings)
so identical invocations produce byte-identical output.  Exit codes: 0
success, 2 suite violations, 64 usage errors, 65 malformed or oversized data.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .arith import DYADIC_INF
from .enumeration import enumerate_subcubic_trees
from .family import generate_family, recognize, tau
from .fixtures import get_fixture
from .graph import (
    Graph,
    NotSubcubicError,
    NotTreeError,
    ParseError,
    format_edge_list,
    parse_edge_list,
)
from .graph6 import emit_graph6, parse_graph6
from .harness import SUITES, run_suite, search_counterexample
from .lp import fractional_porous_number
from .solvers import (
    domination_number,
    exponential_domination_number,
    porous_exponential_domination_number,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 2
EXIT_USAGE = 64
EXIT_DATA = 65

SIZE_GUARD = 26


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _rational(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, "r", encoding="ascii") as handle:
        return handle.read()


def _load_graph(args) -> Graph:
    if getattr(args, "fixture", None):
        return get_fixture(args.fixture)
    if args.input is None:
        raise ParseError("no input given (pass a path, '-', or --fixture)")
    text = _read_text(args.input)
    fmt = getattr(args, "format", "auto")
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    try:
        return parse_edge_list(text)
    except ParseError as edge_err:
        try:
            return parse_graph6(text)
        except ParseError as g6_err:
            head = text.lstrip()[:1]
            looks_like_edges = head == "" or head.isdigit() or head in "#n"
            raise edge_err if looks_like_edges else g6_err from None


def _default_jobs() -> int:
    raw = os.environ.get("EXPODOM_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _cmd_compute(args) -> int:
    g = _load_graph(args)
    want_ilp = not args.no_ilp
    if want_ilp and g.n > SIZE_GUARD and not args.force:
        print(
            f"refusing the exponential searches at n={g.n} > {SIZE_GUARD}; "
            "pass --force or --no-ilp",
            file=sys.stderr,
        )
        return EXIT_DATA
    gamma = domination_number(g)
    out = {"n": g.n, "gamma": gamma.value, "gamma_witness": list(gamma.witness)}
    if want_ilp:
        ge = exponential_domination_number(g)
        ges = porous_exponential_domination_number(g)
        out["gamma_e"] = ge.value
        out["gamma_e_witness"] = list(ge.witness)
        out["gamma_e_star"] = ges.value
        out["gamma_e_star_witness"] = list(ges.witness)
    else:
        out["gamma_e"] = out["gamma_e_witness"] = None
        out["gamma_e_star"] = out["gamma_e_star_witness"] = None
    if args.no_lp:
        out["gamma_ef_star"] = None
    else:
        out["gamma_ef_star"] = _rational(fractional_porous_number(g))
    print(json.dumps(out))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    for t in enumerate_subcubic_trees(args.n):
        print(emit_graph6(t))
    return EXIT_OK


def _cmd_tau(args) -> int:
    g = _load_graph(args)
    if not 0 <= args.vertex < g.n:
        print(f"vertex {args.vertex} out of range for n={g.n}", file=sys.stderr)
        return EXIT_DATA
    result = tau(g, args.vertex)
    if result.value is DYADIC_INF:
        payload = {"vertex": args.vertex, "tau": "inf", "witness": None}
    else:
        payload = {
            "vertex": args.vertex,
            "tau": _rational(result.value.to_fraction()),
            "witness": list(result.witness),
        }
    print(json.dumps(payload))
    return EXIT_OK


def _cmd_family(args) -> int:
    if args.recognize is not None:
        saved_input = args.input
        args.input = args.recognize
        g = _load_graph(args)
        args.input = saved_input
        trace = recognize(g)
        payload = {
            "member": trace is not None,
            "trace": trace.to_json_obj() if trace is not None else None,
        }
        print(json.dumps(payload))
        return EXIT_OK
    if args.nmax is None:
        raise ParseError("family needs --nmax or --recognize")
    for t in generate_family(args.nmax):
        print(emit_graph6(t))
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.nmax, jobs=args.jobs)
    print(report.to_json())
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def _cmd_conjecture(args) -> int:
    report = search_counterexample(args.id, args.nmax, jobs=args.jobs)
    print(report.to_json())
    return EXIT_OK


def _cmd_fixture(args) -> int:
    g = get_fixture(args.id)
    if args.format == "edgelist":
        sys.stdout.write(format_edge_list(g))
    else:
        print(emit_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="expodom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[], help="all parameters of one graph")
    p.add_argument("input", nargs="?", help="edge list or graph6 file, or -")
    p.add_argument("--fixture", help="use a built-in fixture (f1:<k> or f2)")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"),
                   default="auto")
    p.add_argument("--no-ilp", action="store_true",
                   help="skip the exponential domination searches")
    p.add_argument("--no-lp", action="store_true",
                   help="skip the fractional relaxation")
    p.add_argument("--force", action="store_true",
                   help="override the size guard on exponential searches")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("enumerate", help="stream non-isomorphic subcubic trees")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("tau", help="repair influence of a vertex")
    p.add_argument("input", nargs="?", help="edge list or graph6 file, or -")
    p.add_argument("--fixture", help="use a built-in fixture")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"),
                   default="auto")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("family", help="generate or recognize family members")
    p.add_argument("--nmax", type=int)
    p.add_argument("--recognize", metavar="INPUT",
                   help="emit a construction trace for this tree")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"),
                   default="auto")
    p.set_defaults(func=_cmd_family, input=None, fixture=None)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture", help="scan for counterexamples")
    p.add_argument("--id", type=int, required=True, choices=(1, 2))
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("fixture", help="emit a built-in fixture")
    p.add_argument("--id", required=True, help="f1, f1:<k>, or f2")
    p.add_argument("--format", choices=("graph6", "edgelist"),
                   default="graph6")
    p.set_defaults(func=_cmd_fixture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, NotTreeError, NotSubcubicError, OSError) as exc:
        print(f"expodom: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"expodom: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command-line front end.

Subcommands: construct (build a k-shifted labeling), verify (re-check a
certificate), decide (exhaustive small-graph search), spectrum (sweep a
shift range), threshold-p3 (component count that absorbs a given edge
budget). JSON goes to stdout, a one-line human summary to stderr.

Exit codes: 0 for success/feasible/valid, 2 for infeasible/invalid,
1 for usage, input, or budget problems.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import families
from .certificate import check_certificate, labeling_to_certificate
from .constructors import (
    construct_cp3,
    construct_double_star,
    construct_p5prime,
    construct_path_shifted,
    construct_star,
    construct_two_p4,
    construct_two_s3,
    p3_threshold,
)
from .errors import (
    AntimagicError,
    BadParameters,
    CertificateError,
    NoSddsFound,
)
from .graph import Graph, parse_edge_list
from .labeling import EdgeLabeling, negate_labeling, shift_labeling, vertex_sums
from .spectrum import (
    DEFAULT_BUDGET,
    AllShifts,
    closed_form_spectrum,
    decide,
    finite_window,
    spectrum,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REJECT = 2

_FAMILY_HELP = (
    "path, star, double_star, cp3, two_p4, two_s3, p5prime, cycle, complete, "
    "complete_bipartite, cube, petersen; shorthands like p7 (path) and s4 (star)"
)


class _Parser(argparse.ArgumentParser):
    """Parser whose usage errors exit with status 1 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _need(args: argparse.Namespace, family: str, key: str) -> int:
    value = getattr(args, key, None)
    if value is None:
        raise BadParameters(f"family {family!r} needs --{key}")
    return value


def _build_family(args: argparse.Namespace) -> tuple[Graph, dict | None]:
    """Resolve --family into a graph plus a descriptor for special handling."""
    name = args.family.strip().lower().replace("-", "_")
    short = re.fullmatch(r"p(\d+)", name)
    if short:
        n = int(short.group(1))
        return families.path(n), {"family": "path", "n": n}
    short = re.fullmatch(r"s(\d+)", name)
    if short:
        n = int(short.group(1))
        return families.star(n), {"family": "star", "n": n}
    if name == "path":
        n = _need(args, name, "n")
        return families.path(n), {"family": "path", "n": n}
    if name == "star":
        n = _need(args, name, "n")
        return families.star(n), {"family": "star", "n": n}
    if name == "double_star":
        a, b = _need(args, name, "a"), _need(args, name, "b")
        return families.double_star(a, b), {"family": "double_star", "a": a, "b": b}
    if name == "cp3":
        c = _need(args, name, "c")
        return families.cp3(c), {"family": "cp3", "c": c}
    if name == "two_p4":
        return families.two_p4(), {"family": "two_p4"}
    if name == "two_s3":
        return families.two_s3(), {"family": "two_s3"}
    if name == "p5prime":
        return families.p5prime(), {"family": "p5prime"}
    if name == "cycle":
        return families.cycle(_need(args, name, "n")), None
    if name == "complete":
        return families.complete(_need(args, name, "n")), None
    if name == "complete_bipartite":
        a, b = _need(args, name, "a"), _need(args, name, "b")
        return families.complete_bipartite(a, b), None
    if name == "cube":
        return families.cube(), None
    if name == "petersen":
        return families.petersen(), None
    raise BadParameters(f"unknown family {args.family!r}")


def _load_graph(args: argparse.Namespace) -> tuple[Graph, dict | None]:
    if getattr(args, "graph", None):
        return parse_edge_list(_read_text(args.graph)), None
    return _build_family(args)


def _construct_any(
    g: Graph, desc: dict | None, k: int, budget: int
) -> EdgeLabeling | None:
    if desc is not None:
        fam = desc["family"]
        if fam == "path":
            n = desc["n"]
            if n == 2:
                return None
            if n >= 6:
                return construct_path_shifted(n, k)
            return decide(g, k, budget)
        if fam == "star":
            if desc["n"] == 1:
                return None
            return construct_star(desc["n"], k)
        if fam == "double_star":
            return construct_double_star(desc["a"], desc["b"], k)
        if fam == "cp3":
            c = desc["c"]
            if k >= c // 2:
                return construct_cp3(c, k)
            if k < -((5 * c) // 2):
                return negate_labeling(construct_cp3(c, -(2 * c + k + 1)))
            return None
        if fam == "two_p4":
            return construct_two_p4(k)
        if fam == "two_s3":
            return construct_two_s3(k)
        if fam == "p5prime":
            return construct_p5prime(k)
    try:
        win = finite_window(g, budget)
    except NoSddsFound:
        return decide(g, k, budget)
    if k > win.hi:
        return shift_labeling(win.certificate, k)
    if k < win.lo:
        return negate_labeling(shift_labeling(win.certificate, -(g.m + 1) - k))
    return decide(g, k, budget)


def _cmd_construct(args: argparse.Namespace) -> int:
    g, desc = _load_graph(args)
    f = _construct_any(g, desc, args.k, args.budget)
    if f is None:
        _emit({"feasible": False, "k": args.k, "n": g.n, "m": g.m}, args.out)
        print(f"infeasible: no {args.k}-shifted labeling exists", file=sys.stderr)
        return EXIT_REJECT
    doc = labeling_to_certificate(f, args.k)
    if not doc["valid"]:
        raise AntimagicError(
            "internal error: constructed labeling failed verification"
        )
    _emit(doc, args.out)
    print(
        f"feasible: labels {args.k + 1}..{args.k + g.m} placed on {g.m} edges",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        doc = json.loads(_read_text(args.certificate))
    except json.JSONDecodeError as exc:
        raise CertificateError(f"certificate is not valid JSON: {exc}") from exc
    verdict, f, k = check_certificate(doc)
    out = {
        "valid": bool(verdict),
        "k": k,
        "n": f.graph.n,
        "m": f.graph.m,
        "vertex_sums": list(vertex_sums(f)),
        "code": verdict.code,
        "witness": list(verdict.witness) if verdict.witness is not None else None,
        "detail": verdict.detail,
    }
    _emit(out, args.out)
    if verdict:
        print(f"valid certificate (n={f.graph.n}, m={f.graph.m}, k={k})", file=sys.stderr)
        return EXIT_OK
    print(f"invalid certificate: {verdict.code}: {verdict.detail}", file=sys.stderr)
    return EXIT_REJECT


def _cmd_decide(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args)
    f = decide(g, args.k, args.budget)
    if f is None:
        _emit({"feasible": False, "k": args.k, "n": g.n, "m": g.m}, args.out)
        print(f"infeasible: exhaustive search rules out k={args.k}", file=sys.stderr)
        return EXIT_REJECT
    _emit(labeling_to_certificate(f, args.k), args.out)
    print(f"feasible: found a {args.k}-shifted labeling", file=sys.stderr)
    return EXIT_OK


def _parse_window(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise BadParameters(f"window must look like LO:HI, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise BadParameters(f"window bounds must be integers, got {text!r}") from exc
    return lo, hi


def _cmd_spectrum(args: argparse.Namespace) -> int:
    g, desc = _load_graph(args)
    override = _parse_window(args.window) if args.window else None
    try:
        report = spectrum(g, window=override, budget=args.budget)
    except NoSddsFound:
        if desc is not None:
            try:
                known = closed_form_spectrum(
                    desc["family"],
                    n=desc.get("n"),
                    a=desc.get("a"),
                    b=desc.get("b"),
                    c=desc.get("c"),
                )
            except BadParameters:
                known = None
            if isinstance(known, AllShifts):
                _emit(
                    {
                        "n": g.n,
                        "m": g.m,
                        "edges": [list(e) for e in g.edges],
                        "window": None,
                        "excluded_all_shifts": True,
                    },
                    args.out,
                )
                print("every shift is infeasible for this graph", file=sys.stderr)
                return EXIT_OK
        raise
    _emit(report.to_dict(), args.out)
    window_note = (
        "no provable window"
        if report.window is None
        else f"window [{report.window.lo}, {report.window.hi}] via {report.window.method}"
    )
    print(
        f"{window_note}; swept {report.sweep_lo}..{report.sweep_hi}; "
        f"excluded shifts: {list(report.excluded)}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_threshold(args: argparse.Namespace) -> int:
    value = p3_threshold(args.edges)
    _emit({"edges": args.edges, "threshold": value}, args.out)
    print(
        f"unions with at least {value} three-vertex paths absorb {args.edges} edges",
        file=sys.stderr,
    )
    return EXIT_OK


def _add_graph_arguments(p: argparse.ArgumentParser) -> None:
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", metavar="PATH", help="edge-list file, or - for stdin")
    source.add_argument("--family", metavar="NAME", help=_FAMILY_HELP)
    p.add_argument("--n", type=int, help="vertex or leaf count for --family")
    p.add_argument("--a", type=int, help="first size parameter for --family")
    p.add_argument("--b", type=int, help="second size parameter for --family")
    p.add_argument("--c", type=int, help="component count for cp3")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="antimagic",
        description="Construct, verify, and decide shifted-antimagic labelings.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a k-shifted labeling")
    _add_graph_arguments(c)
    c.add_argument("--k", type=int, required=True, help="shift to construct for")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.add_argument("--out", metavar="PATH", help="write JSON here instead of stdout")
    c.set_defaults(handler=_cmd_construct)

    v = sub.add_parser("verify", help="re-check a certificate file")
    v.add_argument("certificate", help="certificate JSON path, or - for stdin")
    v.add_argument("--out", metavar="PATH")
    v.set_defaults(handler=_cmd_verify)

    d = sub.add_parser("decide", help="exhaustively decide one shift")
    _add_graph_arguments(d)
    d.add_argument("--k", type=int, required=True, help="shift to decide")
    d.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    d.add_argument("--out", metavar="PATH")
    d.set_defaults(handler=_cmd_decide)

    s = sub.add_parser("spectrum", help="sweep shifts and report feasibility")
    _add_graph_arguments(s)
    s.add_argument(
        "--window",
        metavar="LO:HI",
        help="override the swept range (write --window=LO:HI for negatives)",
    )
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(handler=_cmd_spectrum)

    t = sub.add_parser(
        "threshold-p3",
        help="three-vertex-path count that makes any union absolutely antimagic",
    )
    t.add_argument("--edges", type=int, required=True, help="edge count of the base graph")
    t.add_argument("--out", metavar="PATH")
    t.set_defaults(handler=_cmd_threshold)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except AntimagicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

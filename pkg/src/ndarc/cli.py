"""Command-line front end: ``ndarc {colour,verify,exact,gen,scan}``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 algorithm
inapplicable, 4 internal theorem violation, 5 negative verdict (colouring
not nd, search budget exhausted, or conjecture counterexample found).
"""
from __future__ import annotations

import argparse
import json
import sys

from .colouring import ColouringError, is_nd, is_proper, lower_bound
from .digraph import degrees
from .dispatch import ALGORITHMS, build_report, dispatch
from .exact import DEFAULT_NODE_BUDGET, BudgetExceeded, all_small_digraphs, exact_ndi, scan_conjecture
from .fileformat import ParseError, emit_digraph, parse_coloured, parse_digraph
from .generators import MODELS, generate
from .proper import NotApplicable, TheoremViolation

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INAPPLICABLE, EXIT_VIOLATION, EXIT_NEGATIVE = range(6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, payload: dict, text: str):
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_colour(args) -> int:
    D = parse_digraph(_read(args.input))
    report = dispatch(D, args.algo)
    _emit(args, report.as_json(), report.as_text())
    if not report.verified or report.colours_used > report.bound_claimed:
        print("internal error: construction failed verification", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_verify(args) -> int:
    D, gamma = parse_coloured(_read(args.input))
    if gamma is None:
        raise ParseError(0, "verify needs a colour on every arc line")
    report = build_report(D, gamma, "input", gamma.k)
    proper = is_proper(D, gamma)
    nd = is_nd(D, gamma)
    text = report.as_text()
    if not nd:
        text += f"\nnot neighbour-distinguishing: {nd.reason}"
    payload = report.as_json() | {"proper": bool(proper)}
    _emit(args, payload, text)
    return EXIT_OK if nd else EXIT_NEGATIVE


def cmd_exact(args) -> int:
    D = parse_digraph(_read(args.input))
    if D.m == 0:
        raise NotApplicable("nothing to colour: digraph has no arcs")
    lb = lower_bound(D)
    ds = degrees(D).delta_star
    try:
        res = exact_ndi(D, cap=args.max_colours, node_budget=args.node_budget)
    except BudgetExceeded as exc:
        payload = {"status": "budget exceeded", "low": exc.low, "high": exc.high, "nodes": exc.nodes}
        _emit(args, payload, f"budget exceeded after {exc.nodes} nodes: {exc.low} <= ndi <= {exc.high}")
        return EXIT_NEGATIVE
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = build_report(D, res.witness, "exact", res.ndi)
    payload = report.as_json() | {"ndi": res.ndi, "lower_bound": lb, "delta_star": ds,
                                  "nodes_explored": res.nodes_explored}
    text = f"ndi = {res.ndi} (Delta* = {ds}, lower bound = {lb}, {res.nodes_explored} nodes)\n" + report.as_text()
    _emit(args, payload, text)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.n is None:
        raise UsageError("gen needs --n")
    try:
        D = generate(args.model, args.n, args.p, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(emit_digraph(D))
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.model == "exhaustive":
        n = 3 if args.n is None else args.n
        try:
            source = list(all_small_digraphs(n))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        if args.n is None:
            raise UsageError("scan with a random model needs --n")
        import numpy as np

        rng = np.random.default_rng(args.seed)
        try:
            source = [generate(args.model, args.n, args.p, rng) for _ in range(args.count)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    report = scan_conjecture(source, node_budget=args.node_budget, jobs=args.jobs)
    payload = report.as_dict()
    lines = [
        f"instances: {report.instances} ({report.skipped_empty} without arcs)",
        f"solved exactly: {report.solved}",
        f"budget exhausted: {len(report.budget_exhausted)}",
        "ndi - Delta* histogram: " + ", ".join(f"{k}: {v}" for k, v in sorted(report.gap_histogram.items())),
    ]
    if report.counterexamples:
        lines.insert(0, f"COUNTEREXAMPLES FOUND: {len(report.counterexamples)}")
        for o in report.counterexamples:
            lines.append(f"  n={o.n} ndi={o.ndi} Delta*={o.delta_star} arcs={list(o.arcs)}")
    else:
        lines.append("no counterexample to ndi <= Delta* + 1")
    _emit(args, payload, "\n".join(lines))
    return EXIT_NEGATIVE if report.counterexamples else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ndarc", description="Neighbour-distinguishing arc colourings of digraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", default="-", help="arc-list file ('-' for stdin)")
        p.add_argument("--output", choices=("text", "json"), default="text")

    p = sub.add_parser("colour", help="construct and verify an nd-colouring")
    common(p)
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("verify", help="check a coloured arc list")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact neighbour-distinguishing index")
    common(p)
    p.add_argument("--max-colours", type=int, default=None)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen", help="generate a digraph")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("scan", help="search for counterexamples to ndi <= Delta* + 1")
    common(p, needs_input=False)
    p.add_argument("--model", choices=("exhaustive",) + MODELS, default="exhaustive")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotApplicable as exc:
        print(f"inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except TheoremViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (UsageError, ColouringError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

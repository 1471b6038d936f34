"""Command-line interface: generate, solve, verify, nullspace, trace.

Exit codes: 0 success, 1 domain failures (unsolvable with
--require-solvable, caps exceeded, cross-check disagreement, corpus
failures), 2 usage or input parse errors. Results go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bits import BitVector
from .errors import CapExceededError, GraphParseError
from .generators import KINDS, generate
from .gf2 import (
    DEFAULT_NULLITY_CAP,
    build_system,
    eliminate,
    in_span,
    min_weight_solution,
    solve_using,
)
from .graphs import Graph, parse_graph, to_edge_list, to_json_obj
from .inductive import DEFAULT_N_CAP, complementing_set
from .oracle import GraphCorpus, verify_theorem

ENV_MAX_N = "TOGGLED_MAX_N"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toggled", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph and print it")
    p_gen.add_argument("kind", choices=KINDS)
    p_gen.add_argument("params", nargs="*", help="generator parameters, e.g. rows cols")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--format", choices=("text", "json"), default="text")

    p_solve = sub.add_parser("solve", help="solve for a press-set")
    p_solve.add_argument("--graph", required=True, help="graph file, or - for stdin")
    p_solve.add_argument("--from", dest="start", default=None, metavar="BITS")
    tgt = p_solve.add_mutually_exclusive_group()
    tgt.add_argument("--target", choices=("complement", "all-on", "all-off"), default=None)
    tgt.add_argument("--to", dest="goal", default=None, metavar="BITS")
    p_solve.add_argument("--method", choices=("gf2", "inductive", "both"), default="gf2")
    p_solve.add_argument("--min-weight", action="store_true")
    p_solve.add_argument("--nullity-cap", type=int, default=DEFAULT_NULLITY_CAP)
    p_solve.add_argument("--trace", action="store_true")
    p_solve.add_argument("--require-solvable", action="store_true")
    p_solve.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="check the complement guarantee over a corpus")
    corpus = p_verify.add_mutually_exclusive_group(required=True)
    corpus.add_argument("--exhaustive", type=int, metavar="N")
    corpus.add_argument("--sampled", type=int, nargs=2, metavar=("N", "COUNT"))
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--p", type=float, default=0.5)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_null = sub.add_parser("nullspace", help="rank, nullity, and quiet-pattern basis")
    p_null.add_argument("--graph", required=True)
    p_null.add_argument("--format", choices=("text", "json"), default="text")

    p_trace = sub.add_parser("trace", help="constructive solve with the full event log")
    p_trace.add_argument("--graph", required=True)
    p_trace.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _load_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _parse_bits(text: str, n: int, what: str) -> BitVector:
    bits = BitVector.from_string(text)
    if bits.n != n:
        raise ValueError(f"{what} has length {bits.n}, graph has {n} vertices")
    return bits


def _inductive_cap() -> int:
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_N_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None


def _cmd_gen(args) -> int:
    params = []
    for tok in args.params:
        try:
            params.append(int(tok))
        except ValueError:
            params.append(float(tok))
    g = generate(args.kind, params, seed=args.seed)
    if args.format == "json":
        print(json.dumps(to_json_obj(g)))
    else:
        sys.stdout.write(to_edge_list(g))
    return 0


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    n = g.n
    start = _parse_bits(args.start, n, "--from") if args.start else BitVector.zeros(n)
    if args.goal is not None:
        delta = start ^ _parse_bits(args.goal, n, "--to")
    else:
        target = args.target or "complement"
        if target == "complement":
            delta = BitVector.ones(n)
        elif target == "all-on":
            delta = start ^ BitVector.ones(n)
        else:
            delta = start
    method = args.method
    if method in ("inductive", "both") and delta != BitVector.ones(n):
        raise _Usage(f"--method {method} only solves the complement (all-ones) delta")
    if args.min_weight and method == "inductive":
        raise _Usage("--min-weight needs the gf2 outcome; use --method gf2 or both")
    if args.trace and method == "gf2":
        raise _Usage("--trace needs --method inductive or both")

    elim = eliminate(build_system(g))
    nullity = elim.width - elim.rank
    outcome = solve_using(elim, delta)
    trace = None
    if method in ("inductive", "both"):
        constructed, trace = complementing_set(g, n_cap=_inductive_cap())
        if method == "both":
            assert outcome is not None  # all-ones delta is always solvable
            if not in_span(outcome.nullspace_basis, constructed ^ outcome.particular):
                print("method disagreement: answers differ by more than a quiet pattern",
                      file=sys.stderr)
                return 1
            press = outcome.particular
        else:
            press = constructed
    else:
        if outcome is None:
            if args.format == "json":
                print(json.dumps({"press_set": None, "weight": None,
                                  "nullity": nullity, "method": method}))
            else:
                print("unsolvable")
            return 1 if args.require_solvable else 0
        press = outcome.particular
    if args.min_weight:
        assert outcome is not None
        press = min_weight_solution(outcome, args.nullity_cap)

    if args.format == "json":
        payload = {
            "press_set": press.to_string(),
            "weight": press.weight,
            "nullity": nullity,
            "method": method,
        }
        if args.trace and trace is not None:
            payload["trace"] = trace.to_json()
        print(json.dumps(payload))
    else:
        print(press.braces())
        if args.trace and trace is not None:
            sys.stdout.write(trace.to_text())
    return 0


def _cmd_verify(args) -> int:
    if args.exhaustive is not None:
        corpus = GraphCorpus.exhaustive(args.exhaustive)
    else:
        n, count = args.sampled
        corpus = GraphCorpus.sampled(n, count, seed=args.seed, p=args.p)
    report = verify_theorem(corpus, n_cap=_inductive_cap())
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"checked={report.checked} failures={len(report.failures)}")
        for text in report.failures:
            print("failure:")
            sys.stdout.write(text)
    return 1 if report.failures else 0


def _cmd_nullspace(args) -> int:
    g = _load_graph(args.graph)
    elim = eliminate(build_system(g))
    outcome = solve_using(elim, BitVector.zeros(g.n))
    assert outcome is not None  # the zero target is always consistent
    basis = [b.to_string() for b in outcome.nullspace_basis]
    if args.format == "json":
        print(json.dumps({"rank": elim.rank, "nullity": len(basis), "basis": basis}))
    else:
        print(f"rank={elim.rank} nullity={len(basis)}")
        for line in basis:
            print(line)
    return 0


def _cmd_trace(args) -> int:
    g = _load_graph(args.graph)
    press, trace = complementing_set(g, n_cap=_inductive_cap())
    if args.format == "json":
        print(json.dumps({
            "press_set": press.to_string(),
            "weight": press.weight,
            "trace": trace.to_json(),
        }))
    else:
        print(press.braces())
        sys.stdout.write(trace.to_text())
    return 0


class _Usage(Exception):
    """Flag combination rejected after argparse; maps to exit 2."""


_COMMANDS = {
    "gen": _cmd_gen,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "nullspace": _cmd_nullspace,
    "trace": _cmd_trace,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _COMMANDS[args.command](args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

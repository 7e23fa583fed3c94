"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (rendered as JSON on
stdout), 2 on verification failure or bad usage.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import shlex
import sys

from . import calculus, core, sets, verify
from .calculus import NaturalExtension
from .errors import MonadicaError
from .expr import differentiate, parse


def _default_seed() -> int:
    try:
        return int(os.environ.get("MONADICA_SEED", "0"))
    except ValueError:
        return 0


def _print_json(data, pretty: bool) -> None:
    print(json.dumps(data, indent=2 if pretty else None))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monadica",
        description="Exact arithmetic with nilpotent infinitesimals and a "
        "limit-free derivative engine.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression at a generalized value")
    p.add_argument("expr")
    p.add_argument("--at", required=True, metavar="VALUE_JSON")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("diff", help="derivative value at the shadow of a point")
    p.add_argument("expr")
    p.add_argument("--at", required=True, metavar="VALUE_JSON")
    p.add_argument("--order", type=int, default=1)

    p = sub.add_parser("taylor", help="partial sum, remainder bound, and witness")
    p.add_argument("expr")
    p.add_argument("--center", type=float, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--at", required=True, metavar="VALUE_JSON")
    p.add_argument("--domain", nargs=2, type=float, default=(-math.inf, math.inf))
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("seq", help="inspect the sequence a value denotes")
    seq_sub = p.add_subparsers(dest="seq_command", required=True)
    q = seq_sub.add_parser("print", help="print a prefix of the sequence")
    q.add_argument("value", metavar="VALUE_JSON")
    q.add_argument("--terms", type=int, default=16)

    p = sub.add_parser("sets", help="set algebra on monads of real sets")
    p.add_argument("op", choices=sorted(_SET_OPS))
    p.add_argument("args", nargs="*", metavar="JSON")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", choices=sorted(verify.SUITES), default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--pretty", action="store_true")

    sub.add_parser("repl", help="read commands from stdin, one per line")
    return parser


def _require_args(op: str, args: list[str], count: int) -> None:
    if len(args) != count:
        raise MonadicaError(f"sets {op} expects {count} JSON argument(s)")


def _cmd_sets(ns) -> int:
    op = ns.op
    args = ns.args
    unary = {
        "interior": sets.interior,
        "exterior": sets.exterior,
        "boundary": sets.boundary,
        "closure": sets.closure,
    }
    binary = {
        "union": sets.union,
        "intersect": sets.intersect,
        "difference": sets.difference,
    }
    predicates = {
        "is_open": sets.is_open,
        "is_closed": sets.is_closed,
        "is_compact": sets.is_compact,
        "is_connected": sets.is_connected,
    }
    if op in binary:
        _require_args(op, args, 2)
        out = binary[op](sets.set_from_json(args[0]), sets.set_from_json(args[1]))
        _print_json(sets.set_to_dict(out), ns.pretty)
    elif op in unary:
        _require_args(op, args, 1)
        _print_json(sets.set_to_dict(unary[op](sets.set_from_json(args[0]))), ns.pretty)
    elif op in predicates:
        _require_args(op, args, 1)
        _print_json(predicates[op](sets.set_from_json(args[0])), ns.pretty)
    elif op == "monad":
        _require_args(op, args, 1)
        out = sets.monad(sets.realset_from_dict(json.loads(args[0])))
        _print_json(sets.set_to_dict(out), ns.pretty)
    elif op == "shadow":
        _require_args(op, args, 1)
        out = sets.shadow(sets.set_from_json(args[0]))
        _print_json(sets.realset_to_dict(out), ns.pretty)
    elif op == "length":
        _require_args(op, args, 1)
        _print_json(sets.length(sets.set_from_json(args[0])), ns.pretty)
    elif op in ("sup", "inf"):
        _require_args(op, args, 1)
        fn = sets.sup_r if op == "sup" else sets.inf_r
        _print_json(fn(sets.set_from_json(args[0])), ns.pretty)
    elif op in ("max", "min"):
        _require_args(op, args, 1)
        fn = sets.max_r if op == "max" else sets.min_r
        _print_json(fn(sets.set_from_json(args[0])), ns.pretty)
    elif op == "member":
        _require_args(op, args, 2)
        value = core.from_json(args[0])
        _print_json(sets.member(value, sets.set_from_json(args[1])), ns.pretty)
    return 0


_SET_OPS = {
    "union",
    "intersect",
    "difference",
    "monad",
    "shadow",
    "interior",
    "exterior",
    "boundary",
    "closure",
    "is_open",
    "is_closed",
    "is_compact",
    "is_connected",
    "length",
    "sup",
    "inf",
    "max",
    "min",
    "member",
}


def _cmd_verify(ns) -> int:
    seed = ns.seed if ns.seed is not None else _default_seed()
    results = (
        verify.run_suite(ns.suite, seed) if ns.suite else verify.run_all(seed)
    )
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    summary = {
        "suites": sorted({r.suite for r in results}),
        "checks": len(results),
        "failed": len(failed),
        "seed": seed,
    }
    _print_json(summary, ns.pretty)
    return 2 if failed else 0


def _dispatch(ns) -> int:
    if ns.command == "eval":
        value = calculus.gen_eval(parse(ns.expr), core.from_json(ns.at))
        _print_json(core.to_dict(value), ns.pretty)
        return 0
    if ns.command == "diff":
        x = core.from_json(ns.at)
        d = differentiate(parse(ns.expr), ns.order)
        print(json.dumps(d.eval_real(core.sigma(x))))
        return 0
    if ns.command == "taylor":
        lo, hi = ns.domain
        f = NaturalExtension.on_interval(parse(ns.expr), lo, hi)
        x = core.from_json(ns.at)
        result = calculus.taylor_expand(f, ns.center, ns.order, x)
        _print_json(result.to_dict(), ns.pretty)
        return 0
    if ns.command == "seq":
        from . import seq as seq_mod

        x = core.from_json(ns.value)
        print(json.dumps(seq_mod.prefix(x, ns.terms)))
        return 0
    if ns.command == "sets":
        return _cmd_sets(ns)
    if ns.command == "verify":
        return _cmd_verify(ns)
    if ns.command == "repl":
        return _repl()
    raise MonadicaError(f"unknown command {ns.command!r}")


def _repl() -> int:
    parser = _build_parser()
    for line in sys.stdin:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("quit", "exit"):
            break
        try:
            argv = shlex.split(line)
            if argv and argv[0] == "repl":
                print(json.dumps({"error": "repl cannot nest"}))
                continue
            ns = parser.parse_args(argv)
            _dispatch(ns)
        except SystemExit:
            continue  # argparse already reported the usage problem
        except MonadicaError as exc:
            print(json.dumps({"error": str(exc)}))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        return _dispatch(ns)
    except MonadicaError as exc:
        print(json.dumps({"error": str(exc)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())

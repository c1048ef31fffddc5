"""Command-line interface: ``zdposet analyze|example|check|random``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analysis import analysis_document, poset_echo, pretty
from .errors import BadParamsError, CapExceeded, PosetError, UnknownExampleError
from .generators import EXAMPLES, named_example, random_poset
from .graphs import gamma, gamma_e, to_dot
from .poset import format_poset, parse_poset, zero_divisor_mask
from .theorems import CHECK_NAMES, FAIL, NOT_APPLICABLE, PASS, sweep

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_INVALID = 2
EXIT_NO_ZERO_DIVISORS = 3


def _dump(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        P = parse_poset(text)
    except PosetError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not zero_divisor_mask(P):
        sys.stdout.write(_dump({"poset": poset_echo(P), "error": "no zero-divisors"}))
        print("error: no zero-divisors", file=sys.stderr)
        return EXIT_NO_ZERO_DIVISORS
    if args.dot:
        G = gamma(P) if args.dot == "gamma" else gamma_e(P)
        sys.stdout.write(to_dot(G, args.dot))
        return EXIT_OK
    doc = analysis_document(P)
    sys.stdout.write(pretty(doc) if args.pretty else _dump(doc))
    return EXIT_OK


def cmd_example(args: argparse.Namespace) -> int:
    try:
        P = named_example(args.name, args.param)
    except (UnknownExampleError, BadParamsError) as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_INVALID
    label = args.name if args.param is None else f"{args.name} {args.param}"
    sys.stdout.write(format_poset(P, comment=f"example: {label}"))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    try:
        summary = sweep(args.max_size, workers=args.workers)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    doc = summary.to_dict()
    if args.json:
        sys.stdout.write(_dump(doc))
    else:
        lines = [f"posets checked: {doc['instances']} (sizes 1..{args.max_size})"]
        for name in CHECK_NAMES:
            c = doc["counts"][name]
            lines.append(f"{name:<24} pass {c[PASS]:>7}  fail {c[FAIL]:>5}  n/a {c[NOT_APPLICABLE]:>7}")
        for f in doc["failures"]:
            lines.append(f"FAIL {f['check']}: {f['poset']}  witness: {', '.join(f['witness'])}")
        lines.append("all checks passed" if not doc["failures"] else f"{len(doc['failures'])} failures")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if summary.failure_count == 0 else EXIT_FAILURES


def cmd_random(args: argparse.Namespace) -> int:
    try:
        P = random_poset(args.size, args.density, args.seed)
    except BadParamsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    comment = f"random: size {args.size} density {args.density} seed {args.seed}"
    sys.stdout.write(format_poset(P, comment=comment))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdposet",
        description="Zero-divisor graphs of finite posets and their reduced graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a poset file")
    p.add_argument("path")
    p.add_argument("--dot", choices=["gamma", "gammaE"], help="emit a DOT graph instead of JSON")
    p.add_argument("--pretty", action="store_true", help="human-readable report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("example", help="print a named example poset")
    p.add_argument("name", help="one of: " + ", ".join(EXAMPLES))
    p.add_argument("param", nargs="?", type=int, help="size parameter where the example takes one")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("check", help="check every result over all small posets")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("random", help="print a seeded random poset")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

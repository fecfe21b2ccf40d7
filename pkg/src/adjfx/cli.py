"""``fx``: run law suites, or evaluate a demo program.

Exit status is 0 on success, 1 when a law check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .demo.interpreter import eval_program
from .demo.parser import ParseError, parse_program
from .monads import BASE_MONADS
from .suites import FAULTS, SUITES, ConfigError, SuiteConfig, report_json, report_text, run_suite

__all__ = ["main", "build_parser"]


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {n}")
    return n


def _base_list(text: str) -> tuple[str, ...]:
    names = tuple(n.strip() for n in text.split(",") if n.strip())
    bad = [n for n in names if n not in BASE_MONADS]
    if bad or not names:
        raise argparse.ArgumentTypeError(
            f"unknown base monad(s) {', '.join(bad) or '(none given)'}; "
            f"choose from {', '.join(BASE_MONADS)}")
    return names


def _binding(text: str) -> tuple[str, int]:
    name, sep, value = text.partition("=")
    try:
        if not sep or not name.strip():
            raise ValueError
        return name.strip(), int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected NAME=INT, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fx", description="Monad transformers translated along adjunctions.")
    sub = parser.add_subparsers(dest="command", required=True)

    law = sub.add_parser("lawcheck", help="run law and diagram checks")
    law.add_argument("--suite", choices=SUITES, default="all")
    law.add_argument("--base-monads", type=_base_list, default=tuple(BASE_MONADS),
                     metavar="LIST",
                     help=f"comma-separated subset of {','.join(BASE_MONADS)}")
    law.add_argument("--seed", type=_positive, default=42)
    law.add_argument("--sample-cap", type=_positive, default=64, metavar="N",
                     help="values drawn per object when enumeration is too large")
    law.add_argument("--output", choices=("text", "json"), default="text")
    law.add_argument("--inject-fault", choices=FAULTS, default=None,
                     help="add checks on a deliberately broken fixture")

    demo = sub.add_parser("demo", help="evaluate a demo program")
    demo.add_argument("--program", required=True, metavar="FILE")
    demo.add_argument("--env", type=_binding, action="append", default=[],
                      metavar="NAME=INT")
    demo.add_argument("--init-state", type=int, default=0, metavar="N")
    demo.add_argument("--output", choices=("text", "json"), default="text")
    demo.add_argument("--stack", choices=("derived", "oracle"), default="derived",
                      help="translated transformers (default) or the reference ones")
    return parser


def _lawcheck(args, parser) -> int:
    try:
        cfg = SuiteConfig(suite=args.suite, base_monads=args.base_monads,
                          seed=args.seed, sample_cap=args.sample_cap,
                          output=args.output, fault=args.inject_fault)
    except ConfigError as exc:
        parser.error(str(exc))
    report, status = run_suite(cfg)
    render = report_json if cfg.output == "json" else report_text
    sys.stdout.write(render(report, cfg))
    return status


def _demo(args, parser) -> int:
    try:
        with open(args.program, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as exc:
        parser.error(f"cannot read {args.program}: {exc.strerror}")
    try:
        program = parse_program(source)
    except ParseError as exc:
        print(f"fx demo: syntax error: {exc}", file=sys.stderr)
        return 2
    result = eval_program(program, dict(args.env), args.init_state, args.stack)
    if args.output == "json":
        sys.stdout.write(json.dumps(result.as_dict(), ensure_ascii=False) + "\n")
    else:
        outcome = (f"error: {result.error}" if result.error is not None
                   else f"value: {result.value}")
        print(outcome)
        print(f"log: {result.log}")
        print(f"final state: {result.final_state}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    run = _lawcheck if args.command == "lawcheck" else _demo
    try:
        return run(args, parser)
    except BrokenPipeError:
        # the reader went away (e.g. `| head`); stay quiet about it
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""
bezout-reduce command line.

    python -m bezout.cli reduce --ring int --input m.json [--algorithm diagonal] [--emit-transcript]
    python -m bezout.cli check adequate 12 2
    python -m bezout.cli selftest [--suite minors] [--seed 42]
    python -m bezout.cli info poly:5
"""
from __future__ import annotations

import argparse
from typing import Optional, Sequence

from bezout import __version__
from bezout.cli.commands import CONDITIONS, cmd_check, cmd_info, cmd_reduce, cmd_selftest
from bezout.cli.errors import handle_error
from bezout.cli.selftest import SUITES
from bezout.observability import configure_logging
from bezout.reduction import ALGORITHMS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bezout-reduce",
        description="Exact diagonal reduction over Bezout domains and element-condition certificates",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Override BEZOUT_REDUCE_LOG_LEVEL (logs go to stderr)")
    sub = parser.add_subparsers(dest="command", required=True)

    reduce_p = sub.add_parser("reduce", help="Diagonally reduce a JSON matrix")
    reduce_p.add_argument("--ring", default=None, help="int | poly:p | zloc23 | mod:n | quat")
    reduce_p.add_argument("--input", default="-", help="JSON matrix file ('-' for stdin)")
    reduce_p.add_argument("--algorithm", choices=sorted(ALGORITHMS), default="diagonal")
    reduce_p.add_argument("--emit-transcript", action="store_true", help="Append the elementary-op list")
    reduce_p.set_defaults(handler=cmd_reduce)

    check_p = sub.add_parser("check", help="Certify an element condition")
    check_p.add_argument("condition", choices=sorted(CONDITIONS))
    check_p.add_argument("args", nargs="*", help="Condition arguments in the ring's text encoding")
    check_p.add_argument("--ring", default=None, help="Ring descriptor (default depends on the condition)")
    check_p.set_defaults(handler=cmd_check)

    selftest_p = sub.add_parser("selftest", help="Run the bundled invariant suites")
    selftest_p.add_argument("--suite", choices=list(SUITES), default=None)
    selftest_p.add_argument("--seed", type=int, default=None)
    selftest_p.set_defaults(handler=cmd_selftest)

    info_p = sub.add_parser("info", help="Describe a ring descriptor")
    info_p.add_argument("descriptor")
    info_p.set_defaults(handler=cmd_info)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except Exception as exc:
        return handle_error(exc)

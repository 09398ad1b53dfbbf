"""
Command-line front end.

Features:
- ``reduce`` with three algorithms and optional transcripts
- ``check`` for stable, adequate, PM, feckly-clean and Lam conditions
- ``selftest`` invariant suites with a fixed seed
- JSON documents validated by pydantic and a fixed exit-code contract
"""
from bezout.cli.main import build_parser, main

__all__ = ["build_parser", "main"]

"""Subcommand implementations: reduce, check, selftest, info."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Optional

import structlog
from pydantic import BaseModel

from bezout.cli.errors import EXIT_OK, EXIT_VERDICT_FALSE
from bezout.cli.schemas import (
    CertificateDocument,
    InfoDocument,
    MatrixDocument,
    OpDocument,
    ReductionDocument,
    TranscriptDocument,
)
from bezout.cli.selftest import run_selftest
from bezout.conditions import (
    adequate_split,
    feckly_clean_decompose,
    gelfand_witness,
    is_pm_element,
    lam_check,
    locally_stable_witness,
    pm_split,
    pm_witness,
    stable_element,
    stable_range_one,
)
from bezout.config import settings
from bezout.errors import BudgetExceededError, DescriptorMismatchError, ParseError, UnsupportedRingError
from bezout.reduction import ALGORITHMS, ReductionResult, verify_reduction
from bezout.rings import Ring, parse_descriptor

logger = structlog.get_logger(__name__)


def emit(doc: BaseModel) -> None:
    sys.stdout.write(doc.model_dump_json(indent=2, exclude_none=True) + "\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _resolve_ring(flag: Optional[str], document: Optional[str]) -> Ring:
    if flag and document and parse_descriptor(flag) != parse_descriptor(document):
        raise DescriptorMismatchError(f"--ring {flag} conflicts with the input ring {document}")
    descriptor = flag or document
    if not descriptor:
        raise ParseError("no ring given: pass --ring or set \"ring\" in the input")
    return parse_descriptor(descriptor)


def reduction_document(result: ReductionResult, emit_transcript: bool) -> ReductionDocument:
    verify_reduction(result)
    transcript = None
    if emit_transcript:
        described = result.transcript.describe()
        transcript = TranscriptDocument(
            left_ops=[OpDocument(**op) for op in described["left_ops"]],
            right_ops=[OpDocument(**op) for op in described["right_ops"]],
        )
    return ReductionDocument(
        ring=result.source.ring.descriptor,
        algorithm=result.algorithm,
        P=result.P.to_text(),
        Pinv=result.Pinv.to_text(),
        Q=result.Q.to_text(),
        Qinv=result.Qinv.to_text(),
        D=result.D.to_text(),
        chain=[str(d) for d in result.chain],
        pivot_chain=[str(d) for d in result.pivot_chain] if result.pivot_chain else None,
        verified=True,
        transcript=transcript,
    )


def cmd_reduce(args: argparse.Namespace) -> int:
    doc = MatrixDocument.model_validate_json(_read_input(args.input))
    ring = _resolve_ring(args.ring, doc.ring)
    if max(doc.rows, doc.cols) > settings.MAX_SIZE:
        raise BudgetExceededError(
            f"{doc.rows}x{doc.cols} exceeds BEZOUT_REDUCE_MAX_SIZE={settings.MAX_SIZE}"
        )
    matrix = doc.to_matrix(ring)
    result = ALGORITHMS[args.algorithm](matrix)
    logger.info("reduce_done", ring=ring.descriptor, algorithm=args.algorithm, shape=f"{doc.rows}x{doc.cols}")
    emit(reduction_document(result, args.emit_transcript))
    return EXIT_OK


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError as e:
        raise ParseError(f"expected an integer, got {text!r}") from e


def _check_stable_range(ring: Ring, args: list[str]) -> CertificateDocument:
    cert = stable_range_one(_int(args[0]))
    return CertificateDocument(
        condition="stable-range",
        verdict=cert.verdict,
        modulus=cert.modulus,
        pairs_checked=cert.pairs_checked,
        counterexample=[str(v) for v in cert.counterexample] if cert.counterexample else None,
    )


def _check_stable_element(ring: Ring, args: list[str]) -> CertificateDocument:
    cert = stable_element(ring.parse(args[0]))
    return CertificateDocument(
        condition="stable-element", ring=ring.descriptor, verdict=cert.verdict,
        modulus=cert.modulus, pairs_checked=cert.pairs_checked,
    )


def _check_locally_stable(ring: Ring, args: list[str]) -> CertificateDocument:
    y, cert = locally_stable_witness(ring.parse(args[0]), ring.parse(args[1]))
    return CertificateDocument(
        condition="locally-stable", ring=ring.descriptor, verdict=cert.verdict, y=str(y), modulus=cert.modulus
    )


def _check_adequate(ring: Ring, args: list[str]) -> CertificateDocument:
    split = adequate_split(ring.parse(args[0]), ring.parse(args[1]), audit=True)
    audit = [{"prime": str(ell), "gcd": str(g)} for ell, g in split.audit]
    return CertificateDocument(
        condition="adequate", ring=ring.descriptor, verdict=True, r=str(split.r), s=str(split.s), audit=audit
    )


def _check_pm_split(ring: Ring, args: list[str]) -> CertificateDocument:
    a, b, c = (ring.parse(t) for t in args)
    split = pm_split(a, b, c)
    return CertificateDocument(condition="pm-split", ring=ring.descriptor, verdict=True, r=str(split.r), s=str(split.s))


def _check_pm_witness(ring: Ring, args: list[str]) -> CertificateDocument:
    w = pm_witness(*(_int(t) for t in args))
    return CertificateDocument(condition="pm-witness", verdict=True, modulus=w.modulus, r=str(w.r), s=str(w.s))


def _check_pm_element(ring: Ring, args: list[str]) -> CertificateDocument:
    cert = is_pm_element(_int(args[0]))
    return CertificateDocument(
        condition="pm-element",
        verdict=cert.verdict,
        modulus=cert.modulus,
        pairs_checked=len(cert.witnesses),
        counterexample=[str(v) for v in cert.counterexample] if cert.counterexample else None,
    )


def _check_gelfand(ring: Ring, args: list[str]) -> CertificateDocument:
    y, cert = gelfand_witness(ring.parse(args[0]), ring.parse(args[1]))
    return CertificateDocument(
        condition="gelfand", ring=ring.descriptor, verdict=cert.verdict, y=str(y), modulus=cert.modulus
    )


def _check_feckly_clean(ring: Ring, args: list[str]) -> CertificateDocument:
    w = feckly_clean_decompose(ring.parse(args[0]))
    return CertificateDocument(condition="feckly-clean", ring=ring.descriptor, verdict=True, e=str(w.e), unit=str(w.unit))


def _check_lam(ring: Ring, args: list[str]) -> CertificateDocument:
    return CertificateDocument(condition="lam", ring=ring.descriptor, verdict=lam_check(ring.parse(args[0])))


# name -> (arity, default ring, handler)
CONDITIONS: dict[str, tuple[int, str, Callable[[Ring, list[str]], CertificateDocument]]] = {
    "stable-range": (1, "int", _check_stable_range),
    "stable-element": (1, "int", _check_stable_element),
    "locally-stable": (2, "int", _check_locally_stable),
    "adequate": (2, "int", _check_adequate),
    "pm-split": (3, "int", _check_pm_split),
    "pm-witness": (3, "int", _check_pm_witness),
    "pm-element": (1, "int", _check_pm_element),
    "gelfand": (2, "int", _check_gelfand),
    "feckly-clean": (1, "zloc23", _check_feckly_clean),
    "lam": (1, "int", _check_lam),
}


def cmd_check(args: argparse.Namespace) -> int:
    arity, default_ring, handler = CONDITIONS[args.condition]
    if len(args.args) != arity:
        raise ParseError(f"{args.condition} takes {arity} argument(s), got {len(args.args)}")
    ring = parse_descriptor(args.ring or default_ring)
    doc = handler(ring, args.args)
    logger.info("check_done", condition=args.condition, verdict=doc.verdict)
    emit(doc)
    return EXIT_OK if doc.verdict else EXIT_VERDICT_FALSE


def cmd_selftest(args: argparse.Namespace) -> int:
    seed = settings.SELFTEST_SEED if args.seed is None else args.seed
    report = run_selftest(seed, args.suite)
    for suite in report.suites:
        status = "PASS" if suite.passed else "FAIL"
        line = f"{status} {suite.name} ({suite.cases} cases)"
        if suite.detail:
            line += f": {suite.detail}"
        sys.stdout.write(line + "\n")
    sys.stdout.write(report.summary + "\n")
    return EXIT_OK if report.passed == len(report.suites) else EXIT_VERDICT_FALSE


def cmd_info(args: argparse.Namespace) -> int:
    ring = parse_descriptor(args.descriptor)
    try:
        ring.euclidean_size(ring.one)
        euclidean = True
    except UnsupportedRingError:
        euclidean = False
    emit(
        InfoDocument(
            descriptor=ring.descriptor,
            instance=type(ring).__name__,
            commutative=ring.commutative,
            domain=ring.domain,
            euclidean=euclidean,
        )
    )
    return EXIT_OK

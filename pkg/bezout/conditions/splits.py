"""
Adequate and PM decompositions.

``adequate_split`` is factorization-free: it saturates s with the common
part of a and b by repeated gcds, which works unchanged over F_p[x] and
Z_(2) ∩ Z_(3).  The prime audit is optional and uses factorization.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

import structlog

from bezout.config import settings
from bezout.errors import (
    BudgetExceededError,
    NotComaximalError,
    PreconditionError,
    UnsupportedRingError,
    VerificationError,
)
from bezout.rings.base import RingElement
from bezout.rings.integers import Integers

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class AdequateSplit:
    """a = r·s, r comaximal with b, every prime divisor of s shares a factor with b."""
    r: RingElement
    s: RingElement
    audit: tuple[tuple[RingElement, RingElement], ...] = ()


@dataclass(frozen=True)
class PMSplit:
    """a = r·s with rR + bR = R and sR + cR = R."""
    r: RingElement
    s: RingElement


@dataclass(frozen=True)
class PMWitness:
    """(1 + b·r)(1 + c·s) = 0 in Z/aZ."""
    modulus: int
    b: int
    c: int
    r: int
    s: int


@dataclass(frozen=True)
class PMCertificate:
    """Every pair b + c = 1 in Z/nZ has a PM witness."""
    modulus: int
    verdict: bool
    witnesses: tuple[PMWitness, ...] = field(default_factory=tuple)
    counterexample: Optional[tuple[int, int]] = None


def _require_domain(a: RingElement) -> None:
    ring = a.ring
    if not (ring.commutative and ring.domain):
        raise UnsupportedRingError(f"splits are defined over commutative domains, not {ring.descriptor}")


def adequate_split(a: RingElement, b: RingElement, audit: bool = False) -> AdequateSplit:
    """
    Split a = r·s relative to b by gcd saturation.

    g <- gcd(a, b); s <- g; r <- a/g; then while gcd(r, s) is not a unit
    move it from r to s.
    """
    _require_domain(a)
    ring = a.ring
    if a.is_zero():
        raise PreconditionError("adequate split of 0")
    g = ring.gcd(a, b)
    s, r = g, ring.divide(a, g)
    g = ring.gcd(r, s)
    while not ring.is_unit(g):
        r, s = ring.divide(r, g), s * g
        g = ring.gcd(r, s)

    if r * s != a or not ring.is_unit(ring.gcd(r, b)):
        raise VerificationError(f"adequate split ({r}, {s}) of {a} against {b} does not verify")
    report: tuple[tuple[RingElement, RingElement], ...] = ()
    if audit:
        report = tuple((ell, ring.gcd(ell, b)) for ell in ring.prime_divisors(s))
        bad = [str(ell) for ell, d in report if ring.is_unit(d)]
        if bad:
            raise VerificationError(f"prime divisors {bad} of s = {s} are comaximal with {b}")
    return AdequateSplit(r, s, report)


def pm_split(a: RingElement, b: RingElement, c: RingElement) -> PMSplit:
    """a = r·s with r comaximal to b and s comaximal to c, given bR + cR = R."""
    _require_domain(a)
    ring = a.ring
    if not ring.is_unit(ring.gcd(b, c)):
        raise NotComaximalError(f"({b}, {c}) is not comaximal")
    if a.is_zero():
        raise PreconditionError("PM split of 0")
    split = adequate_split(a, c)
    r, s = split.s, split.r
    if r * s != a or not ring.is_unit(ring.gcd(r, b)) or not ring.is_unit(ring.gcd(s, c)):
        raise VerificationError(f"PM split ({r}, {s}) of {a} does not verify")
    return PMSplit(r, s)


def _check_pm_budget(n: int) -> None:
    if n > settings.PM_WITNESS_MAX_MODULUS:
        raise BudgetExceededError(f"modulus {n} exceeds the PM budget {settings.PM_WITNESS_MAX_MODULUS}")


def pm_witness(a: int, b: int, c: int) -> PMWitness:
    """
    First (r, s) in lexicographic order with (1 + b·r)(1 + c·s) = 0 mod a.

    For fixed r with u = 1 + b·r the second factor must vanish modulo
    m = a / gcd(u, a), which pins s to -c⁻¹ mod m when c is invertible mod m.
    """
    if a < 1:
        raise PreconditionError(f"modulus must be positive, got {a}")
    _check_pm_budget(a)
    b, c = b % a, c % a
    if (b + c - 1) % a:
        raise PreconditionError(f"{b} + {c} is not 1 mod {a}")
    for r in range(a):
        m = a // gcd(1 + b * r, a)
        if m == 1:
            return PMWitness(a, b, c, r, 0)
        if gcd(c, m) == 1:
            s = -pow(c, -1, m) % m
            return PMWitness(a, b, c, r, s)
    raise VerificationError(f"no PM witness for b={b}, c={c} mod {a}")


def is_pm_element(n: int) -> PMCertificate:
    """Sweep every b + c = 1 in Z/nZ (n = 1 is the zero ring)."""
    if n < 1:
        raise PreconditionError(f"modulus must be positive, got {n}")
    _check_pm_budget(n)
    witnesses = []
    for b in range(n):
        c = (1 - b) % n
        try:
            witnesses.append(pm_witness(n, b, c))
        except VerificationError:
            logger.warning("pm_counterexample", modulus=n, b=b, c=c)
            return PMCertificate(n, False, tuple(witnesses), (b, c))
    return PMCertificate(n, True, tuple(witnesses))


def gelfand_witness(a: RingElement, b: RingElement) -> tuple[RingElement, PMCertificate]:
    """y with a + b·y nonzero and a PM element, for comaximal integers (a, b)."""
    ring = a.ring
    if not isinstance(ring, Integers):
        raise UnsupportedRingError(f"gelfand witness is computed over int, not {ring.descriptor}")
    if not ring.is_unit(ring.gcd(a, b)):
        raise NotComaximalError(f"({a}, {b}) is not comaximal")
    y = ring.zero if not a.is_zero() else ring.one
    value = a + b * y
    return y, is_pm_element(abs(value.value))

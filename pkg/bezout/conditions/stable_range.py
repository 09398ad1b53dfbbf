"""
Stable range one for residue rings Z/nZ, certified by enumeration.

A pair (x, b) with xR + bR = R needs some y making x + b·y a unit.  Since
x + b·y only depends on b up to a unit factor, it is enough to solve
x + c·y for c a divisor of n (or 0): b = u·c gives y = u⁻¹·y_c.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

import structlog

from bezout.config import settings
from bezout.errors import BudgetExceededError, NotComaximalError, PreconditionError, UnsupportedRingError
from bezout.rings.base import RingElement
from bezout.rings.integers import Integers
from bezout.rings.localized import LocalizedIntegers
from bezout.rings.modular import ModularIntegers

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class StableRangeCertificate:
    """
    Exhaustive stable range one certificate for Z/nZ.

    Pairs are enumerated up to unit orbits: every b is u·c with u a unit
    and c its canonical associate (0 or a divisor of n), and y works for
    (x, c) iff u⁻¹·y works for (x, b).  ``table`` maps each (x, c) to y
    and ``witness`` expands it to any comaximal (x, b).  A failed search
    reports the concrete pair (x, c) as ``counterexample``.
    """
    modulus: int
    verdict: bool
    table: dict[tuple[int, int], int] = field(default_factory=dict)
    counterexample: Optional[tuple[int, int]] = None
    pairs_checked: int = 0

    def witness(self, x: int, b: int) -> int:
        """y with x + b·y a unit mod n, for a comaximal pair (x, b)."""
        n = self.modulus
        if n == 1:
            return 0
        x, b = x % n, b % n
        if gcd(gcd(x, b), n) != 1:
            raise NotComaximalError(f"({x}, {b}) is not comaximal mod {n}")
        ring = ModularIntegers(n)
        u, c = ring.canonical_associate(ring.from_int(b))
        return pow(u.value, -1, n) * self.table[(x, c.value)] % n


def _first_unit_shift(n: int, x: int, b: int) -> Optional[int]:
    return next((y for y in range(n) if gcd(x + b * y, n) == 1), None)


def _certify(n: int) -> StableRangeCertificate:
    if n == 1:
        return StableRangeCertificate(1, True)
    table: dict[tuple[int, int], int] = {}
    checked = 0
    # one representative b per unit orbit
    representatives = [0] + [b for b in range(1, n) if n % b == 0]
    for b in representatives:
        for x in range(n):
            if gcd(gcd(x, b), n) != 1:
                continue
            checked += 1
            y = _first_unit_shift(n, x, b)
            if y is None:
                logger.warning("stable_range_counterexample", modulus=n, x=x, b=b)
                return StableRangeCertificate(n, False, table, (x, b), checked)
            table[(x, b)] = y
    return StableRangeCertificate(n, True, table, None, checked)


def stable_range_one(n: int) -> StableRangeCertificate:
    """Exhaustively certify that Z/nZ has stable range one."""
    if n < 2:
        raise PreconditionError(f"modulus must be at least 2, got {n}")
    if n > settings.STABLE_RANGE_MAX_MODULUS:
        raise BudgetExceededError(
            f"modulus {n} exceeds the exhaustive budget {settings.STABLE_RANGE_MAX_MODULUS}"
        )
    cert = _certify(n)
    logger.debug("stable_range_checked", modulus=n, verdict=cert.verdict, pairs=cert.pairs_checked)
    return cert


def stable_element(a: RingElement) -> StableRangeCertificate:
    """a is stable iff R/aR has stable range one; R/aR is Z/|a|Z (or Z/2^i3^jZ over zloc23)."""
    if not isinstance(a.ring, (Integers, LocalizedIntegers)):
        raise UnsupportedRingError(f"R/aR is not enumerated over {a.ring.descriptor}")
    if a.is_zero():
        raise PreconditionError("R/0R is not finite")
    n = a.ring.quotient_modulus(a)
    return _certify(1) if n == 1 else stable_range_one(n)


def locally_stable_witness(a: RingElement, b: RingElement) -> tuple[RingElement, StableRangeCertificate]:
    """y with a + b·y nonzero and stable, for comaximal (a, b)."""
    ring = a.ring
    if not ring.is_unit(ring.gcd(a, b)):
        raise NotComaximalError(f"({a}, {b}) is not comaximal")
    y = ring.zero if not a.is_zero() else ring.one
    return y, stable_element(a + b * y)

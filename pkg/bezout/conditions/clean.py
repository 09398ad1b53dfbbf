"""Feckly-clean decompositions over Z_(2) ∩ Z_(3) and Jacobson-radical checks."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from bezout.errors import PreconditionError, UnsupportedRingError, VerificationError
from bezout.rings.base import RingElement
from bezout.rings.localized import LocalizedIntegers
from bezout.rings.modular import ModularIntegers

# lifts of the idempotents of Z/6Z
IDEMPOTENT_LIFTS = (0, 1, 3, 4)


@dataclass(frozen=True)
class FecklyCleanWitness:
    """a = e + unit with e² - e in J(R) = 6R."""
    a: RingElement
    e: RingElement
    unit: RingElement


@dataclass(frozen=True)
class FecklyCleanTable:
    """rows[r][k]: whether r - IDEMPOTENT_LIFTS[k] is a unit mod 6."""
    rows: tuple[tuple[bool, ...], ...]

    @property
    def complete(self) -> bool:
        return all(any(row) for row in self.rows)

    def first_idempotent(self, residue: int) -> int:
        return next(e for e, ok in zip(IDEMPOTENT_LIFTS, self.rows[residue]) if ok)


def feckly_clean_table() -> FecklyCleanTable:
    return FecklyCleanTable(
        tuple(tuple(gcd(r - e, 6) == 1 for e in IDEMPOTENT_LIFTS) for r in range(6))
    )


def feckly_clean_decompose(a: RingElement) -> FecklyCleanWitness:
    """Pick e in {0, 1, 3, 4} (first that works) with a - e a unit."""
    ring = a.ring
    if not isinstance(ring, LocalizedIntegers):
        raise UnsupportedRingError(f"feckly-clean decomposition runs over zloc23, not {ring.descriptor}")
    e_value = feckly_clean_table().first_idempotent(ring.residue_mod_six(a))
    e = ring.from_int(e_value)
    unit = a - e
    if not ring.is_unit(unit) or not ring.jacobson_membership(e * e - e):
        raise VerificationError(f"feckly-clean witness e={e} for {a} does not verify")
    return FecklyCleanWitness(a, e, unit)


def lam_check(a: RingElement) -> bool:
    """RaR = R implies a is a unit.  On every instance here RaR = R iff aR = R."""
    ring = a.ring
    return not ring.generates_unit_ideal(a) or ring.is_unit(a)


def jacobson_semisimple_quotient(n: int) -> bool:
    """J(Z/nZ) = 0, checked element by element (true iff n is square-free)."""
    if n < 2:
        raise PreconditionError(f"modulus must be at least 2, got {n}")
    ring = ModularIntegers(n)
    return not any(ring.jacobson_membership(ring.from_int(k)) for k in range(1, n))

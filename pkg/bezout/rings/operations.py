"""
Free-function form of the ring operations.

Thin wrappers over the ``Ring`` methods so callers can write
``extended_gcd(a, b)`` without reaching for ``a.ring``.
"""
from __future__ import annotations

from typing import Optional

from bezout.errors import DescriptorMismatchError, PreconditionError, UnsupportedRingError
from bezout.rings.base import BezoutWitness, Ring, RingElement
from bezout.rings.integers import Integers
from bezout.rings.localized import LocalizedIntegers
from bezout.rings.modular import ModularIntegers


def _ring_of(*elements: RingElement) -> Ring:
    ring = elements[0].ring
    for e in elements[1:]:
        if e.ring != ring:
            raise DescriptorMismatchError(f"{ring.descriptor} vs {e.ring.descriptor}")
    return ring


def add(a: RingElement, b: RingElement) -> RingElement:
    return _ring_of(a, b).add(a, b)


def sub(a: RingElement, b: RingElement) -> RingElement:
    return _ring_of(a, b).sub(a, b)


def mul(a: RingElement, b: RingElement) -> RingElement:
    return _ring_of(a, b).mul(a, b)


def neg(a: RingElement) -> RingElement:
    return a.ring.neg(a)


def is_unit(a: RingElement) -> bool:
    return a.ring.is_unit(a)


def inverse(a: RingElement) -> RingElement:
    return a.ring.inverse(a)


def try_divide(a: RingElement, b: RingElement) -> Optional[RingElement]:
    return _ring_of(a, b).try_divide(a, b)


def divide(a: RingElement, b: RingElement) -> RingElement:
    return _ring_of(a, b).divide(a, b)


def divides(a: RingElement, b: RingElement) -> bool:
    return _ring_of(a, b).divides(a, b)


def extended_gcd(a: RingElement, b: RingElement) -> BezoutWitness:
    return _ring_of(a, b).extended_gcd(a, b)


def canonical_associate(a: RingElement) -> tuple[RingElement, RingElement]:
    return a.ring.canonical_associate(a)


def jacobson_membership(a: RingElement) -> bool:
    return a.ring.jacobson_membership(a)


def mspec(a: RingElement) -> list[int]:
    return a.ring.mspec(a)


def euclidean_size(a: RingElement) -> int:
    return a.ring.euclidean_size(a)


def quotient_ring(a: RingElement) -> ModularIntegers:
    """The concrete residue ring R/aR for the integer-like instances."""
    if not isinstance(a.ring, (Integers, LocalizedIntegers)):
        raise UnsupportedRingError(f"R/aR is not built over {a.ring.descriptor}")
    n = a.ring.quotient_modulus(a)
    if n < 2:
        raise PreconditionError(f"R/aR is the zero ring for the unit {a}")
    return ModularIntegers(n)

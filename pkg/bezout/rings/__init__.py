"""
Ring instances for exact Bezout-domain arithmetic.

Features:
- Common ``Ring`` interface with gcd witnesses, canonical associates and
  Jacobson-radical membership
- Integers, F_p[x], Z_(2) ∩ Z_(3), Z/nZ and the rational quaternions
- Text codec for elements and ring descriptors
"""
from bezout.rings.base import BezoutWitness, GcdBlock, GcdCofactors, Ring, RingElement
from bezout.rings.codec import DESCRIPTOR_KINDS, parse_descriptor
from bezout.rings.integers import Integers, prime_factors
from bezout.rings.localized import LocalizedIntegers
from bezout.rings.modular import ModularIntegers
from bezout.rings.operations import (
    add,
    canonical_associate,
    divide,
    divides,
    euclidean_size,
    extended_gcd,
    inverse,
    is_unit,
    jacobson_membership,
    mspec,
    mul,
    neg,
    quotient_ring,
    sub,
    try_divide,
)
from bezout.rings.polynomials import PolyOverPrimeField
from bezout.rings.quaternions import RationalQuaternions

__all__ = [
    "BezoutWitness",
    "GcdBlock",
    "GcdCofactors",
    "Ring",
    "RingElement",
    "DESCRIPTOR_KINDS",
    "parse_descriptor",
    "Integers",
    "prime_factors",
    "LocalizedIntegers",
    "ModularIntegers",
    "PolyOverPrimeField",
    "RationalQuaternions",
    "add",
    "canonical_associate",
    "divide",
    "divides",
    "euclidean_size",
    "extended_gcd",
    "inverse",
    "is_unit",
    "jacobson_membership",
    "mspec",
    "mul",
    "neg",
    "quotient_ring",
    "sub",
    "try_divide",
]

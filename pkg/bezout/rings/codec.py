"""Ring descriptor strings: 'int', 'poly:p', 'zloc23', 'mod:n', 'quat'."""
from __future__ import annotations

from bezout.errors import ParseError
from bezout.rings.base import Ring
from bezout.rings.integers import Integers
from bezout.rings.localized import LocalizedIntegers
from bezout.rings.modular import ModularIntegers
from bezout.rings.polynomials import PolyOverPrimeField
from bezout.rings.quaternions import RationalQuaternions

DESCRIPTOR_KINDS = ("int", "poly:p", "zloc23", "mod:n", "quat")


def _parameter(text: str, kind: str) -> int:
    try:
        return int(text)
    except ValueError as e:
        raise ParseError(f"{kind} needs an integer parameter, got {text!r}") from e


def parse_descriptor(text: str) -> Ring:
    """
    Build the ring instance named by a descriptor string.

    Raises ParseError for unknown text and PreconditionError for invalid
    parameters (non-prime p, n < 2).
    """
    desc = text.strip().lower()
    if desc == "int":
        return Integers()
    if desc == "zloc23":
        return LocalizedIntegers()
    if desc == "quat":
        return RationalQuaternions()
    kind, sep, param = desc.partition(":")
    if sep and kind == "poly":
        return PolyOverPrimeField(_parameter(param, kind))
    if sep and kind == "mod":
        return ModularIntegers(_parameter(param, kind))
    raise ParseError(f"unknown ring descriptor {text!r}; expected one of {', '.join(DESCRIPTOR_KINDS)}")

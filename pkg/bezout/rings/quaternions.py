"""
Rational Hamilton quaternions w + x·i + y·j + z·k.

A noncommutative division ring: every nonzero element is a unit, so gcds
are trivial but the order of every product matters.  Row operations
multiply on the left and column operations on the right.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from bezout.errors import ParseError, PreconditionError
from bezout.rings.base import GcdBlock, Ring, RingElement

Quat = tuple[Fraction, Fraction, Fraction, Fraction]

_ZERO: Quat = (Fraction(0),) * 4
_ONE: Quat = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))
_TERM = re.compile(r"([+-]?)([0-9/]*)\*?([ijk]?)")
_AXIS = {"": 0, "i": 1, "j": 2, "k": 3}


def hamilton(a: Quat, b: Quat) -> Quat:
    a1, b1, c1, d1 = a
    a2, b2, c2, d2 = b
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def norm(a: Quat) -> Fraction:
    return sum((c * c for c in a), Fraction(0))


def conjugate(a: Quat) -> Quat:
    return (a[0], -a[1], -a[2], -a[3])


@dataclass(frozen=True)
class RationalQuaternions(Ring):
    """The division ring of quaternions with rational coordinates (descriptor 'quat')."""

    commutative = False

    @property
    def descriptor(self) -> str:
        return "quat"

    def normalize(self, raw: object) -> Quat:
        if isinstance(raw, (int, Fraction)) and not isinstance(raw, bool):
            return (Fraction(raw), Fraction(0), Fraction(0), Fraction(0))
        if isinstance(raw, (tuple, list)) and len(raw) == 4:
            if all(isinstance(c, (int, Fraction)) and not isinstance(c, bool) for c in raw):
                return tuple(Fraction(c) for c in raw)  # type: ignore[return-value]
        raise PreconditionError(f"{raw!r} is not a rational quadruple")

    def basis(self, axis: str) -> RingElement:
        """One of the units 1, i, j, k."""
        coords = [0, 0, 0, 0]
        coords[_AXIS[axis if axis != "1" else ""]] = 1
        return self.element(tuple(coords))

    def _from_int(self, n: int) -> Quat:
        return (Fraction(n), Fraction(0), Fraction(0), Fraction(0))

    def _add(self, a: Quat, b: Quat) -> Quat:
        return tuple(x + y for x, y in zip(a, b))  # type: ignore[return-value]

    def _neg(self, a: Quat) -> Quat:
        return tuple(-x for x in a)  # type: ignore[return-value]

    def _mul(self, a: Quat, b: Quat) -> Quat:
        return hamilton(a, b)

    def _is_unit(self, a: Quat) -> bool:
        return a != _ZERO

    def _inverse(self, a: Quat) -> Quat:
        n = norm(a)
        return tuple(c / n for c in conjugate(a))  # type: ignore[return-value]

    def _divide(self, a: Quat, b: Quat) -> Optional[Quat]:
        # a = b·c with c = b⁻¹·a
        return hamilton(self._inverse(b), a)

    def _associate(self, a: Quat) -> tuple[Quat, Quat]:
        if a == _ZERO:
            return _ONE, _ZERO
        return a, _ONE

    def _gcdex(self, a: Quat, b: Quat) -> tuple[Quat, Quat, Quat]:
        if a != _ZERO:
            return _ONE, self._inverse(a), _ZERO
        if b != _ZERO:
            return _ONE, _ZERO, self._inverse(b)
        return _ZERO, _ONE, _ZERO

    def gcd_block(self, a: RingElement, b: RingElement, side: str) -> GcdBlock:
        """
        Blocks for the division ring.  Right side: (a, b)·Q = (1, 0).
        Left side: P·(a, b)^T = (1, 0)^T.  Both zero gives the identity.
        """
        self._check(a, b)
        one, zero = self.one, self.zero
        if a.is_zero() and b.is_zero():
            return GcdBlock(side, zero, (one, zero, zero, one), (one, zero, zero, one))
        if side == "right":
            if not a.is_zero():
                ai = self.inverse(a)
                return GcdBlock(side, one, (ai, -(ai * b), zero, one), (a, b, zero, one))
            bi = self.inverse(b)
            return GcdBlock(side, one, (zero, one, bi, zero), (zero, b, one, zero))
        if not a.is_zero():
            ai = self.inverse(a)
            return GcdBlock(side, one, (ai, zero, -(b * ai), one), (a, zero, b, one))
        bi = self.inverse(b)
        return GcdBlock(side, one, (zero, bi, one, zero), (zero, one, b, zero))

    def _in_jacobson(self, a: Quat) -> bool:
        return a == _ZERO

    def _parse(self, text: str) -> Quat:
        if "," in text:
            parts = text.split(",")
            if len(parts) != 4:
                raise ParseError(f"quaternion needs four coordinates: {text!r}")
            try:
                return tuple(Fraction(p.strip()) for p in parts)  # type: ignore[return-value]
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"bad quaternion coordinate in {text!r}") from e
        s = text.replace(" ", "")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if not terms or "".join(terms) != s:
            raise ParseError(f"malformed quaternion: {text!r}")
        coords = [Fraction(0)] * 4
        for term in terms:
            m = _TERM.fullmatch(term)
            if m is None or (not m.group(2) and not m.group(3)):
                raise ParseError(f"malformed quaternion term {term!r}")
            sign, digits, axis = m.groups()
            try:
                c = Fraction(digits) if digits else Fraction(1)
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"bad coefficient in {term!r}") from e
            coords[_AXIS[axis]] += -c if sign == "-" else c
        return tuple(coords)  # type: ignore[return-value]

    def _format(self, a: Quat) -> str:
        if a[1] == a[2] == a[3] == 0:
            return str(a[0])
        return ",".join(str(c) for c in a)

    def _random(self, rng: random.Random, bound: Optional[int]) -> Quat:
        bound = 5 if bound is None else bound
        return tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(4))  # type: ignore[return-value]

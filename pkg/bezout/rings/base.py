"""
Ring abstraction shared by the five concrete instances.

A ``Ring`` works on canonical raw values through a small set of hooks
(``_add``, ``_mul``, ``_gcdex`` ...) and exposes an element-level API that
checks descriptors and wraps results in ``RingElement``.  Every value is
immutable and canonical, so structural equality is value equality.
"""
from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Optional

from bezout.errors import (
    DescriptorMismatchError,
    DivisionByZeroError,
    NotAUnitError,
    NotDivisibleError,
    PreconditionError,
    UnsupportedRingError,
)


@dataclass(frozen=True)
class RingElement:
    """An element of a concrete ring instance, stored in canonical form."""
    ring: "Ring"
    value: Any

    def _coerce(self, other: Any) -> "RingElement":
        if isinstance(other, int):
            return self.ring.from_int(other)
        return other

    def __add__(self, other: Any) -> "RingElement":
        return self.ring.add(self, self._coerce(other))

    def __radd__(self, other: Any) -> "RingElement":
        return self.ring.add(self._coerce(other), self)

    def __sub__(self, other: Any) -> "RingElement":
        return self.ring.sub(self, self._coerce(other))

    def __rsub__(self, other: Any) -> "RingElement":
        return self.ring.sub(self._coerce(other), self)

    def __mul__(self, other: Any) -> "RingElement":
        return self.ring.mul(self, self._coerce(other))

    def __rmul__(self, other: Any) -> "RingElement":
        return self.ring.mul(self._coerce(other), self)

    def __neg__(self) -> "RingElement":
        return self.ring.neg(self)

    def is_zero(self) -> bool:
        return self.ring.is_zero(self)

    def __str__(self) -> str:
        return self.ring.format(self)

    def __repr__(self) -> str:
        return f"{self.ring.descriptor}({self.ring.format(self)})"


@dataclass(frozen=True)
class BezoutWitness:
    """Constructive gcd certificate: d = a*x + b*y with d | a and d | b."""
    d: RingElement
    x: RingElement
    y: RingElement

    def holds(self, a: RingElement, b: RingElement) -> bool:
        ring = self.d.ring
        return (
            a * self.x + b * self.y == self.d
            and ring.divides(self.d, a)
            and ring.divides(self.d, b)
        )


@dataclass(frozen=True)
class GcdCofactors:
    """d = a*x + b*y, a = d*a_cofactor, b = d*b_cofactor and x*a_cofactor + y*b_cofactor = 1."""
    d: RingElement
    x: RingElement
    y: RingElement
    a_cofactor: RingElement
    b_cofactor: RingElement


@dataclass(frozen=True)
class GcdBlock:
    """
    An invertible 2x2 block, row-major, that moves the gcd of a pair into one slot.

    side == "right": (a, b) * block = (d, 0)
    side == "left":  block * (a, b)^T = (d, 0)^T
    """
    side: str
    d: RingElement
    block: tuple[RingElement, RingElement, RingElement, RingElement]
    inverse: tuple[RingElement, RingElement, RingElement, RingElement]


class Ring(ABC):
    """Bezout-domain abstraction over canonical raw values."""

    commutative: bool = True
    domain: bool = True

    # -- hooks implemented per instance -------------------------------------

    @property
    @abstractmethod
    def descriptor(self) -> str:
        """Descriptor string, e.g. 'int' or 'poly:5'."""

    @abstractmethod
    def normalize(self, raw: Any) -> Any:
        """Bring a raw value to canonical form (raises PreconditionError if foreign)."""

    @abstractmethod
    def _from_int(self, n: int) -> Any: ...

    @abstractmethod
    def _add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def _neg(self, a: Any) -> Any: ...

    @abstractmethod
    def _mul(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def _is_unit(self, a: Any) -> bool: ...

    @abstractmethod
    def _inverse(self, a: Any) -> Any: ...

    @abstractmethod
    def _divide(self, a: Any, b: Any) -> Optional[Any]:
        """Return c with a = b*c, or None. b is nonzero."""

    @abstractmethod
    def _associate(self, a: Any) -> tuple[Any, Any]:
        """Return (u, c) with a = u*c, u a unit and c canonical."""

    @abstractmethod
    def _gcdex(self, a: Any, b: Any) -> tuple[Any, Any, Any]:
        """Return (d, x, y) with d = a*x + b*y canonical."""

    @abstractmethod
    def _in_jacobson(self, a: Any) -> bool: ...

    @abstractmethod
    def _parse(self, text: str) -> Any: ...

    @abstractmethod
    def _format(self, a: Any) -> str: ...

    @abstractmethod
    def _random(self, rng: random.Random, bound: Optional[int]) -> Any: ...

    def _prime_divisors(self, a: Any) -> list[Any]:
        raise UnsupportedRingError(f"prime divisors are not computed over {self.descriptor}")

    def _euclidean_size(self, a: Any) -> int:
        raise UnsupportedRingError(f"{self.descriptor} has no Euclidean size")

    def _quotient_modulus(self, a: Any) -> int:
        raise UnsupportedRingError(f"R/aR is not a concrete residue ring over {self.descriptor}")

    # -- element constructors ----------------------------------------------

    def element(self, raw: Any) -> RingElement:
        return RingElement(self, self.normalize(raw))

    def from_int(self, n: int) -> RingElement:
        return RingElement(self, self._from_int(n))

    @property
    def zero(self) -> RingElement:
        return self.from_int(0)

    @property
    def one(self) -> RingElement:
        return self.from_int(1)

    def parse(self, text: str) -> RingElement:
        return RingElement(self, self.normalize(self._parse(text.strip())))

    def format(self, a: RingElement) -> str:
        self._check(a)
        return self._format(a.value)

    def random_element(self, rng: random.Random, bound: Optional[int] = None) -> RingElement:
        """Deterministic sample for a seeded rng; each instance interprets bound (size, degree, ...)."""
        return RingElement(self, self.normalize(self._random(rng, bound)))

    def _check(self, *elements: RingElement) -> None:
        for e in elements:
            if not isinstance(e, RingElement) or e.ring != self:
                other = e.ring.descriptor if isinstance(e, RingElement) else type(e).__name__
                raise DescriptorMismatchError(f"expected an element of {self.descriptor}, got {other}")

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        self._check(a, b)
        return RingElement(self, self._add(a.value, b.value))

    def neg(self, a: RingElement) -> RingElement:
        self._check(a)
        return RingElement(self, self._neg(a.value))

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        self._check(a, b)
        return RingElement(self, self._add(a.value, self._neg(b.value)))

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        self._check(a, b)
        return RingElement(self, self._mul(a.value, b.value))

    def is_zero(self, a: RingElement) -> bool:
        self._check(a)
        return a.value == self._from_int(0)

    def is_unit(self, a: RingElement) -> bool:
        self._check(a)
        return self._is_unit(a.value)

    def inverse(self, a: RingElement) -> RingElement:
        self._check(a)
        if not self._is_unit(a.value):
            raise NotAUnitError(f"{self._format(a.value)} is not a unit in {self.descriptor}")
        return RingElement(self, self._inverse(a.value))

    # -- divisibility -------------------------------------------------------

    def try_divide(self, a: RingElement, b: RingElement) -> Optional[RingElement]:
        """Return c with a = b*c, or None when b does not divide a."""
        self._check(a, b)
        if self.is_zero(b):
            raise DivisionByZeroError(f"division by zero in {self.descriptor}")
        c = self._divide(a.value, b.value)
        return None if c is None else RingElement(self, c)

    def divide(self, a: RingElement, b: RingElement) -> RingElement:
        c = self.try_divide(a, b)
        if c is None:
            raise NotDivisibleError(f"{self.format(b)} does not divide {self.format(a)} in {self.descriptor}")
        return c

    def divides(self, a: RingElement, b: RingElement) -> bool:
        """True iff b = a*c for some c (zero divides only zero)."""
        self._check(a, b)
        if self.is_zero(a):
            return self.is_zero(b)
        return self._divide(b.value, a.value) is not None

    def canonical_associate(self, a: RingElement) -> tuple[RingElement, RingElement]:
        self._check(a)
        u, c = self._associate(a.value)
        return RingElement(self, u), RingElement(self, c)

    def are_associates(self, a: RingElement, b: RingElement) -> bool:
        return self.canonical_associate(a)[1] == self.canonical_associate(b)[1]

    def generates_unit_ideal(self, a: RingElement) -> bool:
        """True iff RaR = R."""
        return self.canonical_associate(a)[1] == self.one

    def extended_gcd(self, a: RingElement, b: RingElement) -> BezoutWitness:
        self._check(a, b)
        d, x, y = self._gcdex(a.value, b.value)
        return BezoutWitness(RingElement(self, d), RingElement(self, x), RingElement(self, y))

    def gcd(self, a: RingElement, b: RingElement) -> RingElement:
        return self.extended_gcd(a, b).d

    def gcd_cofactors(self, a: RingElement, b: RingElement) -> GcdCofactors:
        """Bezout data whose cofactor identity x*a1 + y*b1 = 1 holds exactly."""
        w = self.extended_gcd(a, b)
        if self.is_zero(w.d):
            return GcdCofactors(w.d, self.one, self.zero, self.one, self.zero)
        return GcdCofactors(w.d, w.x, w.y, self.divide(a, w.d), self.divide(b, w.d))

    def gcd_block(self, a: RingElement, b: RingElement, side: str) -> GcdBlock:
        """Invertible 2x2 block moving gcd(a, b) into the first slot, with its inverse."""
        if not self.commutative:
            raise UnsupportedRingError(f"{self.descriptor} must provide its own gcd blocks")
        c = self.gcd_cofactors(a, b)
        x, y, a1, b1 = c.x, c.y, c.a_cofactor, c.b_cofactor
        if side == "right":
            return GcdBlock(side, c.d, (x, -b1, y, a1), (a1, b1, -y, x))
        return GcdBlock(side, c.d, (x, y, -b1, a1), (a1, -y, b1, x))

    def jacobson_membership(self, a: RingElement) -> bool:
        self._check(a)
        return self._in_jacobson(a.value)

    def prime_divisors(self, a: RingElement) -> list[RingElement]:
        """Canonical prime divisors of a nonzero element, ascending."""
        self._check(a)
        if self.is_zero(a):
            raise PreconditionError("every prime divides 0")
        return [RingElement(self, p) for p in self._prime_divisors(a.value)]

    def mspec(self, a: RingElement) -> list[int]:
        """Labels of the maximal ideals containing a (sorted ascending)."""
        raise UnsupportedRingError(f"mspec is not enumerated over {self.descriptor}")

    def euclidean_size(self, a: RingElement) -> int:
        self._check(a)
        return self._euclidean_size(a.value)

    def quotient_modulus(self, a: RingElement) -> int:
        """The n with R/aR isomorphic to Z/nZ, for instances where that holds."""
        self._check(a)
        return self._quotient_modulus(a.value)

"""
The ring Z_(2) ∩ Z_(3): rationals m/n with n coprime to 6.

Its only maximal ideals are 2R and 3R, so J(R) = 6R and every element is
u·2^i·3^j for a unit u.  Divisibility and gcds only see the exponents.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from sympy.core.intfunc import igcdex

from bezout.errors import ParseError, PreconditionError
from bezout.rings.base import Ring, RingElement

_DENOMINATORS = (1, 1, 1, 5, 7, 11, 13, 25, 35)


def valuations(m: int) -> tuple[int, int]:
    """Exponents of 2 and 3 in a nonzero integer."""
    i = j = 0
    while m % 2 == 0:
        m //= 2
        i += 1
    while m % 3 == 0:
        m //= 3
        j += 1
    return i, j


def coprime_to_six(n: int) -> bool:
    return gcd(n, 6) == 1


@dataclass(frozen=True)
class LocalizedIntegers(Ring):
    """Z localised at the integers coprime to 6 (descriptor 'zloc23')."""

    @property
    def descriptor(self) -> str:
        return "zloc23"

    def normalize(self, raw: object) -> Fraction:
        if isinstance(raw, bool) or not isinstance(raw, (int, Fraction)):
            raise PreconditionError(f"{raw!r} is not a rational number")
        value = Fraction(raw)
        if not coprime_to_six(value.denominator):
            raise PreconditionError(f"{value} has a denominator divisible by 2 or 3")
        return value

    def _from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def _add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def _neg(self, a: Fraction) -> Fraction:
        return -a

    def _mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def _is_unit(self, a: Fraction) -> bool:
        return a != 0 and coprime_to_six(a.numerator)

    def _inverse(self, a: Fraction) -> Fraction:
        return 1 / a

    def _divide(self, a: Fraction, b: Fraction) -> Optional[Fraction]:
        c = a / b
        return c if coprime_to_six(c.denominator) else None

    def _associate(self, a: Fraction) -> tuple[Fraction, Fraction]:
        if a == 0:
            return Fraction(1), Fraction(0)
        i, j = valuations(a.numerator)
        c = Fraction(2**i * 3**j)
        return a / c, c

    def _gcdex(self, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction, Fraction]:
        if a == 0 and b == 0:
            return Fraction(0), Fraction(1), Fraction(0)
        ua, ca = self._associate(a)
        ub, cb = self._associate(b)
        if b == 0:
            return ca, 1 / ua, Fraction(0)
        if a == 0:
            return cb, Fraction(0), 1 / ub
        # integer identity on the 2-3 parts, then absorb the unit parts
        x, y, d = igcdex(int(ca), int(cb))
        return Fraction(int(d)), Fraction(int(x)) / ua, Fraction(int(y)) / ub

    def _in_jacobson(self, a: Fraction) -> bool:
        return a.numerator % 6 == 0

    def _prime_divisors(self, a: Fraction) -> list[Fraction]:
        return [Fraction(p) for p in (2, 3) if a.numerator % p == 0]

    def mspec(self, a: RingElement) -> list[int]:
        return [int(p.value) for p in self.prime_divisors(a)]

    def _euclidean_size(self, a: Fraction) -> int:
        if a == 0:
            return -1
        return sum(valuations(a.numerator))

    def _quotient_modulus(self, a: Fraction) -> int:
        if a == 0:
            raise PreconditionError("R/0R is not a finite residue ring")
        return int(self._associate(a)[1])

    def residue_mod_six(self, a: RingElement) -> int:
        """Image of a in R/6R = Z/6Z, i.e. m·n⁻¹ mod 6."""
        self._check(a)
        return a.value.numerator * pow(a.value.denominator, -1, 6) % 6

    def _parse(self, text: str) -> Fraction:
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"not a fraction: {text!r}") from e
        if not coprime_to_six(value.denominator):
            raise ParseError(f"{text!r} is not in zloc23 (denominator shares a factor with 6)")
        return value

    def _format(self, a: Fraction) -> str:
        return str(a)

    def _random(self, rng: random.Random, bound: Optional[int]) -> Fraction:
        bound = 50 if bound is None else bound
        return Fraction(rng.randint(-bound, bound), rng.choice(_DENOMINATORS))

"""
The residue ring Z/nZ.

Not a domain: it serves as the concrete quotient R/aR of the integer
instances and as the image R/J(R) of the localized one.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, prod
from typing import Optional

from sympy.core.intfunc import igcdex

from bezout.errors import ParseError, PreconditionError
from bezout.rings.base import GcdCofactors, Ring, RingElement
from bezout.rings.integers import prime_factors


@dataclass(frozen=True)
class ModularIntegers(Ring):
    """Z/nZ with residues in [0, n); canonical associates are the divisors of n (and 0)."""
    n: int

    domain = False

    def __post_init__(self) -> None:
        if self.n < 2:
            raise PreconditionError(f"modulus must be at least 2, got {self.n}")

    @property
    def descriptor(self) -> str:
        return f"mod:{self.n}"

    @property
    def radical(self) -> int:
        return prod(prime_factors(self.n))

    def normalize(self, raw: object) -> int:
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise PreconditionError(f"{raw!r} is not an integer residue")
        return raw % self.n

    def _from_int(self, k: int) -> int:
        return k % self.n

    def _add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def _neg(self, a: int) -> int:
        return -a % self.n

    def _mul(self, a: int, b: int) -> int:
        return a * b % self.n

    def _is_unit(self, a: int) -> bool:
        return gcd(a, self.n) == 1

    def _inverse(self, a: int) -> int:
        return pow(a, -1, self.n)

    def _divide(self, a: int, b: int) -> Optional[int]:
        g = gcd(b, self.n)
        if a % g:
            return None
        m = self.n // g
        if m == 1:
            return 0
        return (a // g) * pow(b // g, -1, m) % m

    def _associate(self, a: int) -> tuple[int, int]:
        g = gcd(a, self.n)
        if g == self.n:
            return 1, 0
        step = self.n // g
        u = a // g
        while gcd(u, self.n) != 1:
            u += step
        return u % self.n, g

    def _gcdex(self, a: int, b: int) -> tuple[int, int, int]:
        x1, y1, g1 = igcdex(a, b)
        x2, _, g = igcdex(g1, self.n)
        return int(g) % self.n, int(x2 * x1) % self.n, int(x2 * y1) % self.n

    def gcd_cofactors(self, a: RingElement, b: RingElement) -> GcdCofactors:
        """
        Cofactors a1, b1 are only determined modulo n/d; lift b1 until the
        integer gcd of (a1, b1) is a unit mod n, then rescale the integer
        Bezout identity so that x*a1 + y*b1 = 1 holds in Z/nZ.
        """
        w = self.extended_gcd(a, b)
        if self.is_zero(w.d):
            return GcdCofactors(w.d, self.one, self.zero, self.one, self.zero)
        d = w.d.value
        step = self.n // d
        a1 = self._divide(a.value, d)
        b1 = self._divide(b.value, d)
        assert a1 is not None and b1 is not None
        for k in range(self.n):
            lifted = b1 + k * step
            x, y, g = igcdex(a1, lifted)
            if gcd(int(g), self.n) == 1:
                g_inv = pow(int(g), -1, self.n)
                return GcdCofactors(
                    w.d,
                    self.from_int(int(x) * g_inv),
                    self.from_int(int(y) * g_inv),
                    self.from_int(a1),
                    self.from_int(lifted),
                )
        raise AssertionError(f"no comaximal cofactor lift for ({a1}, {b1}) mod {self.n}")

    def _in_jacobson(self, a: int) -> bool:
        return a % self.radical == 0

    def _parse(self, text: str) -> int:
        try:
            return int(text)
        except ValueError as e:
            raise ParseError(f"not an integer residue: {text!r}") from e

    def _format(self, a: int) -> str:
        return str(a)

    def _random(self, rng: random.Random, bound: Optional[int]) -> int:
        return rng.randrange(self.n)

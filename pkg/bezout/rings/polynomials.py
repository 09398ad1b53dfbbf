"""
The ring F_p[x] of univariate polynomials over a prime field.

Values are tuples in sympy's dense galoistools order (leading coefficient
first), coefficients in [0, p), leading coefficient nonzero; () is zero.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Optional

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_div,
    gf_factor,
    gf_gcdex,
    gf_monic,
    gf_mul,
    gf_neg,
    gf_trunc,
)

from bezout.errors import ParseError, PreconditionError
from bezout.rings.base import Ring, RingElement

Poly = tuple[int, ...]

_TERM = re.compile(r"([+-]?)(\d*)(\*?x(?:(?:\^|\*\*)(\d+))?)?")


@dataclass(frozen=True)
class PolyOverPrimeField(Ring):
    """F_p[x]: Euclidean by degree, J = 0, canonical associates are monic."""
    p: int

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise PreconditionError(f"poly modulus must be prime, got {self.p}")

    @property
    def descriptor(self) -> str:
        return f"poly:{self.p}"

    def _poly(self, coeffs: list) -> Poly:
        return tuple(int(c) for c in gf_trunc(list(coeffs), self.p))

    def normalize(self, raw: object) -> Poly:
        if isinstance(raw, int) and not isinstance(raw, bool):
            return self._poly([raw])
        if isinstance(raw, (tuple, list)) and all(isinstance(c, int) for c in raw):
            return self._poly(list(raw))
        raise PreconditionError(f"{raw!r} is not a dense coefficient sequence")

    @classmethod
    def ascending(cls, p: int, coeffs: list[int]) -> "RingElement":
        """Build c0 + c1*x + ... from ascending coefficients."""
        ring = cls(p)
        return ring.element(tuple(reversed(coeffs)))

    def x(self) -> RingElement:
        return self.element((1, 0))

    def _from_int(self, n: int) -> Poly:
        return self._poly([n])

    def _add(self, a: Poly, b: Poly) -> Poly:
        return self._poly(gf_add(list(a), list(b), self.p, ZZ))

    def _neg(self, a: Poly) -> Poly:
        return self._poly(gf_neg(list(a), self.p, ZZ))

    def _mul(self, a: Poly, b: Poly) -> Poly:
        return self._poly(gf_mul(list(a), list(b), self.p, ZZ))

    def _is_unit(self, a: Poly) -> bool:
        return len(a) == 1

    def _inverse(self, a: Poly) -> Poly:
        return (pow(a[0], -1, self.p),)

    def _divide(self, a: Poly, b: Poly) -> Optional[Poly]:
        q, r = gf_div(list(a), list(b), self.p, ZZ)
        return None if r else self._poly(q)

    def _associate(self, a: Poly) -> tuple[Poly, Poly]:
        if not a:
            return (1,), ()
        lc, monic = gf_monic(list(a), self.p, ZZ)
        return (int(lc),), self._poly(monic)

    def _gcdex(self, a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
        s, t, h = gf_gcdex(list(a), list(b), self.p, ZZ)
        return self._poly(h), self._poly(s), self._poly(t)

    def _in_jacobson(self, a: Poly) -> bool:
        return not a

    def _prime_divisors(self, a: Poly) -> list[Poly]:
        _, factors = gf_factor(list(a), self.p, ZZ)
        return sorted({self._poly(f) for f, _ in factors}, key=lambda f: (len(f), f))

    def _euclidean_size(self, a: Poly) -> int:
        return len(a) - 1

    def _parse(self, text: str) -> Poly:
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty polynomial")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ParseError(f"malformed polynomial: {text!r}")
        coeffs: dict[int, int] = {}
        for term in terms:
            m = _TERM.fullmatch(term)
            if m is None or (not m.group(2) and not m.group(3)):
                raise ParseError(f"malformed term {term!r} in {text!r}")
            sign, digits, xpart, power = m.groups()
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            deg = 0 if not xpart else (int(power) if power else 1)
            coeffs[deg] = coeffs.get(deg, 0) + c
        top = max(coeffs)
        return tuple(coeffs.get(k, 0) for k in range(top, -1, -1))

    def _format(self, a: Poly) -> str:
        if not a:
            return "0"
        terms = []
        for k, c in enumerate(reversed(a)):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        return "+".join(terms)

    def _random(self, rng: random.Random, bound: Optional[int]) -> Poly:
        max_degree = 4 if bound is None else bound
        degree = rng.randint(-1, max_degree)
        return tuple(rng.randrange(self.p) for _ in range(degree + 1))

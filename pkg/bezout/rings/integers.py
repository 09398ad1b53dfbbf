"""The ring Z of arbitrary-precision integers."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from sympy import factorint
from sympy.core.intfunc import igcdex

from bezout.errors import ParseError, PreconditionError
from bezout.rings.base import Ring, RingElement


def prime_factors(n: int) -> list[int]:
    """Ascending prime divisors of a positive integer (trial division first, via sympy)."""
    return sorted(int(p) for p in factorint(n))


@dataclass(frozen=True)
class Integers(Ring):
    """Z: Euclidean, J(Z) = 0, canonical associates are nonnegative."""

    @property
    def descriptor(self) -> str:
        return "int"

    def normalize(self, raw: object) -> int:
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise PreconditionError(f"{raw!r} is not an integer")
        return int(raw)

    def _from_int(self, n: int) -> int:
        return n

    def _add(self, a: int, b: int) -> int:
        return a + b

    def _neg(self, a: int) -> int:
        return -a

    def _mul(self, a: int, b: int) -> int:
        return a * b

    def _is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def _inverse(self, a: int) -> int:
        return a

    def _divide(self, a: int, b: int) -> Optional[int]:
        q, r = divmod(a, b)
        return q if r == 0 else None

    def _associate(self, a: int) -> tuple[int, int]:
        return (-1, -a) if a < 0 else (1, a)

    def _gcdex(self, a: int, b: int) -> tuple[int, int, int]:
        x, y, d = igcdex(a, b)
        return int(d), int(x), int(y)

    def _in_jacobson(self, a: int) -> bool:
        return a == 0

    def _prime_divisors(self, a: int) -> list[int]:
        return prime_factors(abs(a))

    def mspec(self, a: RingElement) -> list[int]:
        return [p.value for p in self.prime_divisors(a)]

    def _euclidean_size(self, a: int) -> int:
        return abs(a)

    def _quotient_modulus(self, a: int) -> int:
        if a == 0:
            raise PreconditionError("Z/0Z is not a finite residue ring")
        return abs(a)

    def _parse(self, text: str) -> int:
        try:
            return int(text)
        except ValueError as e:
            raise ParseError(f"not an integer: {text!r}") from e

    def _format(self, a: int) -> str:
        return str(a)

    def _random(self, rng: random.Random, bound: Optional[int]) -> int:
        bound = 50 if bound is None else bound
        return rng.randint(-bound, bound)

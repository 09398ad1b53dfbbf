"""
Kaplansky's criterion for 2x2 lower-triangular blocks.

For a comaximal triple (a, b, c) find p, q with (pa + qb)R + qcR = R.
From 1 = x(pa + qb) + y(qc) the triple r = xp, s = xq, t = yq satisfies
ra + sb + tc = 1 with s | rt.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Optional

import structlog
from sympy.ntheory.modular import crt

from bezout.config import settings
from bezout.errors import NotComaximalError, UnsupportedRingError, VerificationError
from bezout.rings.base import Ring, RingElement
from bezout.rings.integers import Integers
from bezout.rings.polynomials import PolyOverPrimeField

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class KaplanskyWitness:
    a: RingElement
    b: RingElement
    c: RingElement
    p: RingElement
    q: RingElement
    x: RingElement
    y: RingElement
    r: RingElement
    s: RingElement
    t: RingElement
    quotient: RingElement
    via_crt: bool = False

    def holds(self) -> bool:
        ring = self.a.ring
        one = ring.one
        return (
            self.x * (self.p * self.a + self.q * self.b) + self.y * (self.q * self.c) == one
            and self.r * self.a + self.s * self.b + self.t * self.c == one
            and self.s * self.quotient == self.r * self.t
        )


def candidate(ring: Ring, k: int) -> RingElement:
    """The k-th search value: k itself, or over F_p[x] the polynomial with base-p digits of k."""
    if isinstance(ring, PolyOverPrimeField):
        digits = []
        while k:
            k, d = divmod(k, ring.p)
            digits.append(d)
        return ring.element(tuple(reversed(digits)))
    return ring.from_int(k)


def _unit_gcd(a: RingElement, b: RingElement) -> bool:
    return a.ring.is_unit(a.ring.gcd(a, b))


def _crt_multiplier(a: RingElement, b: RingElement, c: RingElement) -> RingElement:
    """
    p avoiding every prime ℓ | c: p ≡ 0 mod ℓ unless ℓ | b, then p ≡ 1.

    Integers go through sympy's crt; other instances combine Bezout
    idempotents over the prime divisors of c.
    """
    ring = a.ring
    primes = ring.prime_divisors(c)
    if not primes:
        return ring.zero
    residues = [ring.zero if not ring.divides(ell, b) else ring.one for ell in primes]
    if isinstance(ring, Integers):
        moduli = [int(ell.value) for ell in primes]
        solved = crt(moduli, [int(r.value) for r in residues])
        return ring.from_int(int(solved[0]) if solved else 0)
    modulus = reduce(lambda u, v: u * v, primes, ring.one)
    p = ring.zero
    for ell, res in zip(primes, residues):
        if res.is_zero():
            continue
        cofactor = ring.divide(modulus, ell)
        w = ring.extended_gcd(cofactor, ell)
        p = p + cofactor * w.x * ring.inverse(w.d)
    return p


def kaplansky_step(
    a: RingElement, b: RingElement, c: RingElement, search_limit: Optional[int] = None
) -> KaplanskyWitness:
    """
    (p, q) with gcd(pa + qb, qc) a unit, plus the (r, s, t) triple.

    Fixes q = 1 and searches p over the first candidates; when that is
    exhausted, p is built by CRT over the prime divisors of c.
    """
    ring = a.ring
    if not ring.commutative:
        raise UnsupportedRingError(f"kaplansky_step needs a commutative ring, got {ring.descriptor}")
    if not ring.is_unit(ring.gcd(ring.gcd(a, b), c)):
        raise NotComaximalError(f"({a}, {b}, {c}) do not generate the unit ideal")
    limit = settings.KAPLANSKY_SEARCH_LIMIT if search_limit is None else search_limit
    one, zero = ring.one, ring.zero
    via_crt = False

    if ring.is_unit(a):
        p, q = one, zero
    elif c.is_zero():
        w = ring.extended_gcd(a, b)
        d_inv = ring.inverse(w.d)
        p, q = w.x * d_inv, w.y * d_inv
    else:
        q = one
        found: Optional[RingElement] = None
        for k in range(limit):
            p_k = candidate(ring, k)
            if _unit_gcd(p_k * a + b, c):
                found = p_k
                break
        if found is None:
            logger.info("kaplansky_crt_fallback", ring=ring.descriptor, a=str(a), b=str(b), c=str(c))
            found = _crt_multiplier(a, b, c)
            via_crt = True
        p = found

    e, f = p * a + q * b, q * c
    w = ring.extended_gcd(e, f)
    if not ring.is_unit(w.d):
        raise VerificationError(f"gcd({e}, {f}) = {w.d} is not a unit for p={p}, q={q}")
    d_inv = ring.inverse(w.d)
    x, y = w.x * d_inv, w.y * d_inv
    witness = KaplanskyWitness(
        a, b, c, p, q, x, y, r=x * p, s=x * q, t=y * q, quotient=p * y, via_crt=via_crt
    )
    if not witness.holds():
        raise VerificationError(f"kaplansky witness for ({a}, {b}, {c}) does not verify")
    return witness

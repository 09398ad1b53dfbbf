"""
Explicit 2x2 factorizations into elementary matrices.

B12(λ) = [[1, λ], [0, 1]] and B21(λ) = [[1, 0], [λ, 1]] are the 2x2 row
operations ADD_LEFT_MULTIPLE(0, 1, λ) and ADD_LEFT_MULTIPLE(1, 0, λ).
For any s, t, w

    B21(-wt)·B12(s-1)·B21(1)·B12(wt-1) = [[s, swt - 1], [1 - wts, 2wt - wt·s·wt]]

which is [[s, 0], [1 - wts, wt]] exactly when s·w·t = 1.  Products keep
their order, so the identities hold over the quaternions too.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import structlog

from bezout.errors import NotAUnitError, PreconditionError, VerificationError
from bezout.matrices.elementary import ElementaryOp, OpTranscript, elementary, realize
from bezout.matrices.matrix import Matrix
from bezout.rings.base import RingElement

logger = structlog.get_logger(__name__)


def b12(scalar: RingElement) -> ElementaryOp:
    return ElementaryOp.add_left_multiple(0, 1, scalar)


def b21(scalar: RingElement) -> ElementaryOp:
    return ElementaryOp.add_left_multiple(1, 0, scalar)


@dataclass(frozen=True)
class UnitProductFactorization:
    """Four elementary factors (in product order), their product and the expected forms."""
    s: RingElement
    t: RingElement
    w: RingElement
    factors: tuple[ElementaryOp, ElementaryOp, ElementaryOp, ElementaryOp]
    product: Matrix
    closed_form: Matrix
    target: Matrix
    unit_condition: bool
    identity_holds: bool

    @property
    def transcript(self) -> OpTranscript:
        """Row transcript whose P equals ``product`` (rightmost factor applied first)."""
        return OpTranscript(left_ops=tuple(reversed(self.factors)))

    @property
    def inverse(self) -> Matrix:
        return realize(self.transcript, self.product.ring, 2, 2)[1]


def unit_product_factorization(s: RingElement, t: RingElement, w: RingElement) -> UnitProductFactorization:
    """
    Multiply B21(-wt)·B12(s-1)·B21(1)·B12(wt-1) exactly.

    The product always equals the closed form; it equals the target
    [[s, 0], [1 - wts, wt]] whenever s·w·t = 1.  Either failure raises
    VerificationError.
    """
    ring = s.ring
    wt = w * t
    factors = (b21(-wt), b12(s - 1), b21(ring.one), b12(wt - 1))
    product = Matrix.identity(ring, 2)
    for op in factors:
        product = product @ elementary(op, ring, 2)

    closed_form = Matrix.from_rows(ring, [[s, s * wt - 1], [1 - wt * s, 2 * wt - wt * s * wt]])
    target = Matrix.from_rows(ring, [[s, ring.zero], [1 - wt * s, wt]])
    unit_condition = s * w * t == ring.one
    if product != closed_form:
        raise VerificationError(f"elementary product {product} differs from closed form {closed_form}")
    identity_holds = product == target
    if unit_condition and not identity_holds:
        raise VerificationError(f"s·w·t = 1 but product {product} differs from {target}")
    return UnitProductFactorization(s, t, w, factors, product, closed_form, target, unit_condition, identity_holds)


def companion_factorization(s: RingElement, t: RingElement, w: RingElement) -> UnitProductFactorization:
    """The same identity at (s·w, t, 1): target [[sw, 0], [1 - tsw, t]]."""
    return unit_product_factorization(s * w, t, s.ring.one)


def two_sided_unit_witness(b: RingElement) -> tuple[RingElement, RingElement]:
    """(s, t) with s·b·t = 1, available when RbR = R; here b must be a unit."""
    ring = b.ring
    if not ring.is_unit(b):
        raise NotAUnitError(f"no (s, t) with s·{b}·t = 1 over {ring.descriptor}")
    return ring.inverse(b), ring.one


@dataclass(frozen=True)
class PivotIdentity:
    """L·A·R with a 1 brought to position (0, 0); L and R certified by factorizations."""
    s: RingElement
    t: RingElement
    b: RingElement
    left: Matrix
    left_inverse: Matrix
    right: Matrix
    right_inverse: Matrix
    left_factorization: UnitProductFactorization
    right_factorization: UnitProductFactorization
    source: Matrix
    conjugated: Matrix

    @property
    def pivot(self) -> RingElement:
        return self.conjugated[0, 0]


def unit_pivot_identity(
    s: RingElement,
    t: RingElement,
    b: RingElement,
    a: Optional[RingElement] = None,
    c: Optional[RingElement] = None,
) -> PivotIdentity:
    """
    Conjugate A = [[a, 0], [b, c]] to a matrix with pivot 1, given s·b·t = 1.

    L = [[s, 0], [1 - bts, bt]]·swap and R = [[t, 0], [1 - sbt, sb]]; both
    triangular factors come with four-op factorizations, so L and R are
    invertible by construction.
    """
    ring = b.ring
    one, zero = ring.one, ring.zero
    if s * b * t != one:
        raise PreconditionError(f"s·b·t = {s * b * t}, expected 1")
    a = zero if a is None else a
    c = zero if c is None else c

    left_fact = unit_product_factorization(s, t, b)
    right_fact = unit_product_factorization(t, s * b, one)
    swap = ElementaryOp.swap_cols(0, 1)
    left = left_fact.product @ elementary(swap, ring, 2)
    left_inverse = elementary(swap, ring, 2) @ left_fact.inverse
    right = right_fact.product
    right_inverse = right_fact.inverse

    for m, m_inv, name in ((left, left_inverse, "left"), (right, right_inverse, "right")):
        if not (m @ m_inv).is_identity() or not (m_inv @ m).is_identity():
            raise VerificationError(f"{name} factor is not invertible")

    source = Matrix.from_rows(ring, [[a, zero], [b, c]])
    conjugated = left @ source @ right
    if conjugated[0, 0] != one:
        raise VerificationError(f"pivot is {conjugated[0, 0]}, expected 1")
    logger.debug("unit_pivot_identity", ring=ring.descriptor, b=str(b))
    return PivotIdentity(
        s, t, b, left, left_inverse, right, right_inverse, left_fact, right_fact, source, conjugated
    )

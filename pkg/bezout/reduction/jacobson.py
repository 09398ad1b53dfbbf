"""
Reduction over Z_(2) ∩ Z_(3) through its semisimple quotient R/J(R) = Z/6Z.

The image of A is reduced over ModularIntegers(6); every operation is
lifted back to R (multipliers to residue representatives, unit scales
to units, blocks to integer blocks whose determinant is coprime to 6),
and the lifted transcript is finished by an ordinary reduction over R.
"""
from __future__ import annotations

import structlog

from bezout.errors import UnsupportedRingError, VerificationError
from bezout.matrices.elementary import ElementaryOp, OpKind, OpTranscript, replay
from bezout.matrices.matrix import Matrix
from bezout.reduction.diagonal import ReductionResult, build_result, diagonal_reduce
from bezout.rings.base import RingElement
from bezout.rings.localized import LocalizedIntegers
from bezout.rings.modular import ModularIntegers

logger = structlog.get_logger(__name__)

SEMISIMPLE_QUOTIENT = ModularIntegers(6)


def image_mod_jacobson(a: Matrix) -> Matrix:
    """Entrywise image of A in R/6R."""
    ring = a.ring
    assert isinstance(ring, LocalizedIntegers)
    return Matrix.from_rows(
        SEMISIMPLE_QUOTIENT, [[ring.residue_mod_six(e) for e in row] for row in a.to_rows()]
    )


def _lift(ring: LocalizedIntegers, e: RingElement) -> RingElement:
    return ring.from_int(e.value)


def _lift_unit(ring: LocalizedIntegers, e: RingElement) -> RingElement:
    u = _lift(ring, e)
    # invertible modulo J(R) means invertible in R
    if not ring.is_unit(u):
        raise VerificationError(f"lift {u} of the unit {e} is not a unit")
    return u


def _lift_block(ring: LocalizedIntegers, block: tuple) -> tuple[tuple, tuple]:
    b00, b01, b10, b11 = (_lift(ring, e) for e in block)
    det = b00 * b11 - b01 * b10
    if not ring.is_unit(det):
        raise VerificationError(f"lifted block determinant {det} is not a unit")
    det_inv = ring.inverse(det)
    return (b00, b01, b10, b11), (b11 * det_inv, -b01 * det_inv, -b10 * det_inv, b00 * det_inv)


def lift_op(ring: LocalizedIntegers, op: ElementaryOp) -> ElementaryOp:
    """Lift an operation over Z/6Z to an invertible operation over R."""
    if op.kind in (OpKind.ADD_LEFT_MULTIPLE, OpKind.ADD_RIGHT_MULTIPLE):
        return ElementaryOp(op.kind, op.i, op.j, scalar=_lift(ring, op.scalar))
    if op.kind in (OpKind.SCALE_ROW_LEFT, OpKind.SCALE_COL_RIGHT):
        return ElementaryOp(op.kind, op.i, scalar=_lift_unit(ring, op.scalar))
    if op.kind in (OpKind.ROW_BLOCK, OpKind.COL_BLOCK):
        block, inverse = _lift_block(ring, op.block)
        return ElementaryOp(op.kind, op.i, op.j, block=block, block_inverse=inverse)
    return op


def reduce_mod_jacobson(a: Matrix) -> ReductionResult:
    """Diagonal reduction over Z_(2) ∩ Z_(3) steered by the reduction of its image in Z/6Z."""
    ring = a.ring
    if not isinstance(ring, LocalizedIntegers):
        raise UnsupportedRingError(f"mod-jacobson reduction runs over zloc23, not {ring.descriptor}")
    quotient = diagonal_reduce(image_mod_jacobson(a))
    lifted = OpTranscript().extend(lift_op(ring, op) for op in quotient.transcript.left_ops).extend(
        lift_op(ring, op) for op in quotient.transcript.right_ops
    )
    partial = replay(lifted, a)
    finish = diagonal_reduce(partial)
    logger.debug(
        "reduce_mod_jacobson",
        quotient_chain=[str(d) for d in quotient.chain],
        lifted_ops=len(lifted),
        finishing_ops=len(finish.transcript),
    )
    return build_result(a, lifted.concat(finish.transcript), "mod-jacobson")

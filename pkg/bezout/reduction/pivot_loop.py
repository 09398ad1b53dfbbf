"""
Pivot-growth loop for 2x2 matrices.

Alternates a column gcd step on the pivot row with a row gcd step on
the pivot column.  Whenever the pivot fails to divide the entry being
cleared it is replaced by a proper divisor, so the pivots generate a
strictly ascending chain of ideals a R ⊊ a1 R ⊊ a2 R ⊊ ... and their
Euclidean sizes strictly decrease.  Once the matrix is diagonal with
d0 ∤ d1, row 0 += row 1 restarts the loop with a new entry to absorb.
"""
from __future__ import annotations

import structlog

from bezout.config import settings
from bezout.errors import BudgetExceededError, PreconditionError, VerificationError
from bezout.matrices.elementary import ElementaryOp, OpTranscript
from bezout.matrices.matrix import Matrix
from bezout.reduction.diagonal import ReductionResult, build_result, canonicalize
from bezout.reduction.hermite import column_gcd_ops, row_gcd_ops, run_ops
from bezout.rings.base import RingElement

logger = structlog.get_logger(__name__)


def mspec_pivot_loop(a: Matrix) -> ReductionResult:
    """
    Reduce a 2x2 matrix by pivot growth, recording the pivot chain.

    Needs an instance with a Euclidean size (integers, F_p[x], Z_(2) ∩ Z_(3));
    others raise UnsupportedRingError.
    """
    if a.shape != (2, 2):
        raise PreconditionError(f"pivot loop expects a 2x2 matrix, got {a.rows}x{a.cols}")
    ring = a.ring
    ring.euclidean_size(ring.one)  # raises for instances without a size

    m, t = a, OpTranscript()
    pivots: list[RingElement] = []
    if m.is_zero():
        return build_result(a, t, "mspec-loop")

    if m[0, 0].is_zero():
        i, j = next((i, j) for i in range(2) for j in range(2) if not m[i, j].is_zero())
        swaps = ([ElementaryOp.swap_rows(0, i)] if i else []) + ([ElementaryOp.swap_cols(0, j)] if j else [])
        m, t = run_ops(m, t, swaps)

    def record(pivot: RingElement) -> None:
        canonical = ring.canonical_associate(pivot)[1]
        if pivots and canonical == pivots[-1]:
            return
        if pivots and ring.euclidean_size(canonical) >= ring.euclidean_size(pivots[-1]):
            raise VerificationError(f"pivot size did not decrease: {pivots[-1]} -> {canonical}")
        pivots.append(canonical)
        logger.debug("pivot_chain_step", pivot=str(canonical), size=ring.euclidean_size(canonical))

    record(m[0, 0])
    for _ in range(settings.PIVOT_LOOP_MAX_STEPS):
        if m[0, 1].is_zero() and m[1, 0].is_zero():
            if ring.divides(m[0, 0], m[1, 1]):
                break
            m, t = run_ops(m, t, [ElementaryOp.add_left_multiple(0, 1, ring.one)])
        m, t = run_ops(m, t, column_gcd_ops(m[0, 0], m[0, 1], 0, 1))
        record(m[0, 0])
        m, t = run_ops(m, t, row_gcd_ops(m[0, 0], m[1, 0], 0, 1))
        record(m[0, 0])
    else:
        raise BudgetExceededError(f"pivot loop did not settle in {settings.PIVOT_LOOP_MAX_STEPS} steps")

    m, t = canonicalize(m, t)
    return build_result(a, t, "mspec-loop", tuple(pivots))

"""
Hermite triangularization and unimodular row completion.

The pair helpers ``column_gcd_ops`` and ``row_gcd_ops`` are shared with
the diagonal reduction: each one moves the gcd of two entries into the
first slot and zeroes the second, preferring a single elementary
operation when the first entry already divides the second.
"""
from __future__ import annotations

from typing import Optional

import structlog

from bezout.errors import NotComaximalError, VerificationError
from bezout.matrices.elementary import ElementaryOp, OpTranscript, apply
from bezout.matrices.matrix import Matrix
from bezout.rings.base import RingElement

logger = structlog.get_logger(__name__)


def right_quotient(b: RingElement, a: RingElement) -> Optional[RingElement]:
    """c with b = a·c, or None."""
    if a.is_zero():
        return None
    return a.ring.try_divide(b, a)


def left_quotient(b: RingElement, a: RingElement) -> Optional[RingElement]:
    """c with b = c·a, or None."""
    ring = a.ring
    if a.is_zero():
        return None
    if ring.commutative:
        return ring.try_divide(b, a)
    return b * ring.inverse(a) if ring.is_unit(a) else None


def column_gcd_ops(a: RingElement, b: RingElement, i: int, j: int) -> list[ElementaryOp]:
    """Column ops sending entries (a, b) in columns (i, j) of one row to (d, 0)."""
    if b.is_zero():
        return []
    if a.is_zero():
        return [ElementaryOp.swap_cols(i, j)]
    c = right_quotient(b, a)
    if c is not None:
        return [ElementaryOp.add_right_multiple(j, i, -c)]
    blk = a.ring.gcd_block(a, b, "right")
    return [ElementaryOp.col_block(i, j, blk.block, blk.inverse)]


def row_gcd_ops(a: RingElement, b: RingElement, i: int, j: int) -> list[ElementaryOp]:
    """Row ops sending entries (a, b) in rows (i, j) of one column to (d, 0)."""
    if b.is_zero():
        return []
    if a.is_zero():
        return [ElementaryOp.swap_rows(i, j)]
    c = left_quotient(b, a)
    if c is not None:
        return [ElementaryOp.add_left_multiple(j, i, -c)]
    blk = a.ring.gcd_block(a, b, "left")
    return [ElementaryOp.row_block(i, j, blk.block, blk.inverse)]


def normalize_ops(d: RingElement, index: int, side: str) -> list[ElementaryOp]:
    """Unit scale turning a pivot into its canonical associate (nothing if already canonical)."""
    ring = d.ring
    if d.is_zero():
        return []
    u, _ = ring.canonical_associate(d)
    if u == ring.one:
        return []
    u_inv = ring.inverse(u)
    if side == "right":
        return [ElementaryOp.scale_col_right(index, u_inv)]
    return [ElementaryOp.scale_row_left(index, u_inv)]


def run_ops(m: Matrix, t: OpTranscript, ops: list[ElementaryOp]) -> tuple[Matrix, OpTranscript]:
    """Apply ops to m and record them."""
    for op in ops:
        m = apply(op, m)
        t = t.record(op)
    return m, t


def row_gcd_step(a: RingElement, b: RingElement) -> tuple[OpTranscript, RingElement]:
    """
    Column transcript for Q with (a, b)·Q = (d, 0), d the canonical gcd.

    When neither entry is zero Q is the gcd block [[x, -b'], [y, a']]
    stored with its inverse [[a', b'], [-y, x]]; a zero b costs only a
    unit scale.
    """
    ring = a.ring
    ring._check(a, b)
    m = Matrix.from_rows(ring, [[a, b]])
    t = OpTranscript()
    if b.is_zero():
        ops: list[ElementaryOp] = []
    elif a.is_zero():
        ops = [ElementaryOp.swap_cols(0, 1)]
    else:
        blk = ring.gcd_block(a, b, "right")
        ops = [ElementaryOp.col_block(0, 1, blk.block, blk.inverse)]
    m, t = run_ops(m, t, ops)
    m, t = run_ops(m, t, normalize_ops(m[0, 0], 0, "right"))
    if not m[0, 1].is_zero():
        raise VerificationError(f"(a, b)·Q = {m} is not of the form (d, 0)")
    return t, m[0, 0]


def unimodular_completion(p: RingElement, q: RingElement) -> tuple[Matrix, Matrix]:
    """
    U in GL_2 with first row (p, q), and U⁻¹, for comaximal p, q.

    Commutative: U = [[p, q], [-y·u⁻¹, x·u⁻¹]] with u = p·x + q·y a unit.
    Quaternions: U is the inverse of the right gcd block of (p, q).
    """
    ring = p.ring
    w = ring.extended_gcd(p, q)
    if not ring.is_unit(w.d):
        raise NotComaximalError(f"gcd({p}, {q}) = {w.d} is not a unit")
    if ring.commutative:
        u_inv = ring.inverse(p * w.x + q * w.y)
        xu, yu = w.x * u_inv, w.y * u_inv
        u = Matrix.from_rows(ring, [[p, q], [-yu, xu]])
        u_inverse = Matrix.from_rows(ring, [[xu, -q], [yu, p]])
    else:
        blk = ring.gcd_block(p, q, "right")
        inv = blk.inverse
        u = Matrix.from_rows(ring, [[inv[0], inv[1]], [inv[2], inv[3]]])
        u_inverse = Matrix.from_rows(ring, [[blk.block[0], blk.block[1]], [blk.block[2], blk.block[3]]])
    if u.row(0) != [p, q] or not (u @ u_inverse).is_identity() or not (u_inverse @ u).is_identity():
        raise VerificationError(f"completion of ({p}, {q}) failed")
    return u, u_inverse


def hermite_triangularize(a: Matrix) -> tuple[OpTranscript, Matrix]:
    """
    Lower-triangular T = P·A·Q using column operations only.

    Each pivot row is swept rightward with column gcd steps, then its
    pivot is scaled to the canonical associate.  Running it again on T
    gives an empty transcript.
    """
    t = OpTranscript()
    m = a
    for r in range(min(a.rows, a.cols)):
        for j in range(r + 1, a.cols):
            m, t = run_ops(m, t, column_gcd_ops(m[r, r], m[r, j], r, j))
        m, t = run_ops(m, t, normalize_ops(m[r, r], r, "right"))
        logger.debug("hermite_pivot", row=r, pivot=str(m[r, r]))
    if not m.is_lower_triangular():
        raise VerificationError("hermite sweep left nonzero entries above the diagonal")
    return t, m

"""
Diagonal reduction P·A·Q = D with a full divisibility chain.

The reduction runs in three passes over a working copy of A:

1. elimination: pick the first nonzero entry of the trailing submatrix,
   swap it to the pivot slot and alternately clear its row (column gcd
   steps) and its column (row gcd steps) until both are zero;
2. divisibility merge: any pair d_i ∤ d_j on the diagonal is replaced by
   (gcd, lcm) through a 2x2 Kaplansky block, or the closed-form merge
   over Z/nZ;
3. canonical associates: each diagonal entry is scaled to its
   canonical form.

Every step is an ElementaryOp, so P, Q and their inverses come from
the transcript.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import structlog

from bezout.config import settings
from bezout.errors import BudgetExceededError, VerificationError
from bezout.matrices.elementary import ElementaryOp, OpTranscript, realize, replay
from bezout.matrices.matrix import Matrix
from bezout.reduction.hermite import column_gcd_ops, normalize_ops, row_gcd_ops, run_ops, unimodular_completion
from bezout.reduction.kaplansky import kaplansky_step
from bezout.rings.base import RingElement
from bezout.rings.modular import ModularIntegers

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ReductionResult:
    """P·A·Q = D with chain = diagonal of D; pivot_chain is filled by the pivot-growth loop."""
    source: Matrix
    P: Matrix
    Pinv: Matrix
    Q: Matrix
    Qinv: Matrix
    D: Matrix
    chain: tuple[RingElement, ...]
    transcript: OpTranscript
    algorithm: str = "diagonal"
    pivot_chain: tuple[RingElement, ...] = field(default_factory=tuple)


def build_result(a: Matrix, t: OpTranscript, algorithm: str, pivot_chain: tuple[RingElement, ...] = ()) -> ReductionResult:
    p, p_inv, q, q_inv = realize(t, a.ring, a.rows, a.cols)
    d = replay(t, a)
    result = ReductionResult(a, p, p_inv, q, q_inv, d, tuple(d.diagonal()), t, algorithm, tuple(pivot_chain))
    verify_reduction(result)
    return result


def verify_reduction(result: ReductionResult) -> None:
    """Raise VerificationError unless every ReductionResult invariant holds exactly."""
    a, ring = result.source, result.source.ring
    checks = [
        (result.P @ a @ result.Q == result.D, "P·A·Q != D"),
        ((result.P @ result.Pinv).is_identity(), "P·Pinv != I"),
        ((result.Pinv @ result.P).is_identity(), "Pinv·P != I"),
        ((result.Q @ result.Qinv).is_identity(), "Q·Qinv != I"),
        ((result.Qinv @ result.Q).is_identity(), "Qinv·Q != I"),
        (result.D.is_diagonal(), "D is not diagonal"),
        (list(result.chain) == result.D.diagonal(), "chain differs from diag(D)"),
    ]
    for ok, message in checks:
        if not ok:
            raise VerificationError(f"{result.algorithm}: {message}")
    for k, (d, e) in enumerate(zip(result.chain, result.chain[1:])):
        if not ring.divides(d, e):
            raise VerificationError(f"{result.algorithm}: chain[{k}] = {d} does not divide {e}")
    for d in result.chain:
        if ring.canonical_associate(d)[1] != d:
            raise VerificationError(f"{result.algorithm}: chain entry {d} is not canonical")


def _first_nonzero(m: Matrix, start: int) -> Optional[tuple[int, int]]:
    for i in range(start, m.rows):
        for j in range(start, m.cols):
            if not m[i, j].is_zero():
                return i, j
    return None


def _pivot_cleared(m: Matrix, k: int) -> bool:
    return all(m[k, j].is_zero() for j in range(k + 1, m.cols)) and all(
        m[i, k].is_zero() for i in range(k + 1, m.rows)
    )


def eliminate(m: Matrix, t: OpTranscript) -> tuple[Matrix, OpTranscript, int]:
    """Clear every pivot row and column; returns the number of nonzero pivots."""
    rank = 0
    for k in range(min(m.rows, m.cols)):
        pos = _first_nonzero(m, k)
        if pos is None:
            break
        i, j = pos
        swaps = ([ElementaryOp.swap_rows(k, i)] if i != k else []) + (
            [ElementaryOp.swap_cols(k, j)] if j != k else []
        )
        m, t = run_ops(m, t, swaps)
        for _ in range(settings.PIVOT_LOOP_MAX_STEPS):
            if _pivot_cleared(m, k):
                break
            for j in range(k + 1, m.cols):
                m, t = run_ops(m, t, column_gcd_ops(m[k, k], m[k, j], k, j))
            for i in range(k + 1, m.rows):
                m, t = run_ops(m, t, row_gcd_ops(m[k, k], m[i, k], k, i))
        else:
            raise BudgetExceededError(f"pivot {k} not cleared after {settings.PIVOT_LOOP_MAX_STEPS} sweeps")
        logger.debug("diagonal_pivot", index=k, pivot=str(m[k, k]))
        rank += 1
    return m, t, rank


def _modular_merge_ops(a: RingElement, b: RingElement, i: int, j: int) -> list[ElementaryOp]:
    """diag(a, b) -> diag(d, d·a'·b') over Z/nZ from the cofactor identity x·a' + y·b' = 1."""
    ring = a.ring
    c = ring.gcd_cofactors(a, b)
    x, y, a1, b1 = c.x, c.y, c.a_cofactor, c.b_cofactor
    one = ring.one
    return [
        ElementaryOp.row_block(i, j, (x, y, -b1, a1), (a1, -y, b1, x)),
        ElementaryOp.col_block(i, j, (one, -(y * b1), one, x * a1), (x * a1, y * b1, -one, one)),
    ]


def merge_pair(m: Matrix, t: OpTranscript, i: int, j: int) -> tuple[Matrix, OpTranscript]:
    """
    Replace diag entries (d_i, d_j) by (gcd, lcm) up to units.

    Over a domain: row j += row i gives the block [[a, 0], [a, b]]; with g
    its content, kaplansky_step(a/g, a/g, b/g) yields the row (p, q) that is
    completed to U and applied from the left, after which one column gcd
    step and one row step leave diag(g, ab/g).
    """
    a, b = m[i, i], m[j, j]
    ring = m.ring
    if isinstance(ring, ModularIntegers):
        return run_ops(m, t, _modular_merge_ops(a, b, i, j))

    m, t = run_ops(m, t, [ElementaryOp.add_left_multiple(j, i, ring.one)])
    g = ring.gcd(a, b)
    w = kaplansky_step(ring.divide(a, g), ring.divide(a, g), ring.divide(b, g))
    u, u_inv = unimodular_completion(w.p, w.q)
    if not u.is_identity():
        m, t = run_ops(m, t, [ElementaryOp.row_block(i, j, tuple(u.entries), tuple(u_inv.entries))])  # type: ignore[arg-type]
    m, t = run_ops(m, t, column_gcd_ops(m[i, i], m[i, j], i, j))
    m, t = run_ops(m, t, row_gcd_ops(m[i, i], m[j, i], i, j))
    logger.debug("divisibility_merge", i=i, j=j, gcd=str(m[i, i]), p=str(w.p), q=str(w.q))
    return m, t


def enforce_chain(m: Matrix, t: OpTranscript, rank: int) -> tuple[Matrix, OpTranscript]:
    """Merge diagonal pairs until d_0 | d_1 | ... | d_{rank-1}."""
    ring = m.ring
    for i in range(rank):
        for j in range(i + 1, rank):
            if not ring.divides(m[i, i], m[j, j]):
                m, t = merge_pair(m, t, i, j)
    return m, t


def canonicalize(m: Matrix, t: OpTranscript) -> tuple[Matrix, OpTranscript]:
    for k in range(min(m.rows, m.cols)):
        m, t = run_ops(m, t, normalize_ops(m[k, k], k, "right"))
    return m, t


def diagonal_reduce(a: Matrix) -> ReductionResult:
    """
    Reduce A to a diagonal D whose entries form a divisibility chain.

    Works over every instance: commutative domains use the Kaplansky merge,
    Z/nZ the closed-form merge, and over the quaternions every nonzero pivot
    becomes 1 so no merge is needed.
    """
    m, t, rank = eliminate(a, OpTranscript())
    if a.ring.commutative:
        m, t = enforce_chain(m, t, rank)
    m, t = canonicalize(m, t)
    logger.debug("diagonal_reduce_done", ring=a.ring.descriptor, rank=rank, ops=len(t))
    return build_result(a, t, "diagonal")

"""
Elementary row and column operations with explicit inverses.

Row operations act by multiplication on the left and scale on the left;
column operations act on the right.  An ``OpTranscript`` records both
sides in application order and realizes them as (P, P⁻¹, Q, Q⁻¹).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from bezout.errors import IndexOutOfRangeError, NotAUnitError, PreconditionError, VerificationError
from bezout.matrices.matrix import Matrix
from bezout.rings.base import Ring, RingElement

Block = tuple[RingElement, RingElement, RingElement, RingElement]


class OpKind(str, Enum):
    ADD_LEFT_MULTIPLE = "add_left_multiple"
    ADD_RIGHT_MULTIPLE = "add_right_multiple"
    SWAP_ROWS = "swap_rows"
    SWAP_COLS = "swap_cols"
    SCALE_ROW_LEFT = "scale_row_left"
    SCALE_COL_RIGHT = "scale_col_right"
    ROW_BLOCK = "row_block"
    COL_BLOCK = "col_block"


ROW_KINDS = frozenset({OpKind.ADD_LEFT_MULTIPLE, OpKind.SWAP_ROWS, OpKind.SCALE_ROW_LEFT, OpKind.ROW_BLOCK})
_PAIR_KINDS = frozenset(OpKind) - {OpKind.SCALE_ROW_LEFT, OpKind.SCALE_COL_RIGHT}


def _block_product(a: Block, b: Block) -> Block:
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


def _is_identity_block(b: Block) -> bool:
    return b[0] == b[0].ring.one and b[3] == b[3].ring.one and b[1].is_zero() and b[2].is_zero()


@dataclass(frozen=True)
class ElementaryOp:
    """
    One invertible operation.

    ADD_LEFT_MULTIPLE(i, j, λ): row i += λ·(row j)
    ADD_RIGHT_MULTIPLE(i, j, λ): col i += (col j)·λ
    SCALE_ROW_LEFT(i, u): row i = u·(row i)
    SCALE_COL_RIGHT(i, u): col i = (col i)·u
    ROW_BLOCK(i, j, B): rows (i, j) = B·(rows i, j)
    COL_BLOCK(i, j, B): cols (i, j) = (cols i, j)·B
    """
    kind: OpKind
    i: int
    j: Optional[int] = None
    scalar: Optional[RingElement] = None
    block: Optional[Block] = None
    block_inverse: Optional[Block] = None

    def __post_init__(self) -> None:
        if self.kind in _PAIR_KINDS and (self.j is None or self.i == self.j):
            raise PreconditionError(f"{self.kind.value} needs two distinct indices, got ({self.i}, {self.j})")
        if self.kind in (OpKind.SCALE_ROW_LEFT, OpKind.SCALE_COL_RIGHT):
            if self.scalar is None or not self.scalar.ring.is_unit(self.scalar):
                raise NotAUnitError(f"{self.kind.value} by a non-unit {self.scalar}")
        if self.kind in (OpKind.ADD_LEFT_MULTIPLE, OpKind.ADD_RIGHT_MULTIPLE) and self.scalar is None:
            raise PreconditionError(f"{self.kind.value} needs a multiplier")
        if self.kind in (OpKind.ROW_BLOCK, OpKind.COL_BLOCK):
            if self.block is None or self.block_inverse is None:
                raise PreconditionError(f"{self.kind.value} needs a block and its inverse")
            if not (
                _is_identity_block(_block_product(self.block, self.block_inverse))
                and _is_identity_block(_block_product(self.block_inverse, self.block))
            ):
                raise VerificationError("block and stated inverse do not multiply to the identity")

    # -- constructors -------------------------------------------------------

    @classmethod
    def add_left_multiple(cls, i: int, j: int, scalar: RingElement) -> "ElementaryOp":
        return cls(OpKind.ADD_LEFT_MULTIPLE, i, j, scalar=scalar)

    @classmethod
    def add_right_multiple(cls, i: int, j: int, scalar: RingElement) -> "ElementaryOp":
        return cls(OpKind.ADD_RIGHT_MULTIPLE, i, j, scalar=scalar)

    @classmethod
    def swap_rows(cls, i: int, j: int) -> "ElementaryOp":
        return cls(OpKind.SWAP_ROWS, i, j)

    @classmethod
    def swap_cols(cls, i: int, j: int) -> "ElementaryOp":
        return cls(OpKind.SWAP_COLS, i, j)

    @classmethod
    def scale_row_left(cls, i: int, unit: RingElement) -> "ElementaryOp":
        return cls(OpKind.SCALE_ROW_LEFT, i, scalar=unit)

    @classmethod
    def scale_col_right(cls, i: int, unit: RingElement) -> "ElementaryOp":
        return cls(OpKind.SCALE_COL_RIGHT, i, scalar=unit)

    @classmethod
    def row_block(cls, i: int, j: int, block: Block, block_inverse: Block) -> "ElementaryOp":
        return cls(OpKind.ROW_BLOCK, i, j, block=block, block_inverse=block_inverse)

    @classmethod
    def col_block(cls, i: int, j: int, block: Block, block_inverse: Block) -> "ElementaryOp":
        return cls(OpKind.COL_BLOCK, i, j, block=block, block_inverse=block_inverse)

    # -- properties ---------------------------------------------------------

    @property
    def side(self) -> str:
        return "left" if self.kind in ROW_KINDS else "right"

    def indices(self) -> list[int]:
        return [self.i] if self.j is None else [self.i, self.j]

    def inverse(self) -> "ElementaryOp":
        if self.kind in (OpKind.ADD_LEFT_MULTIPLE, OpKind.ADD_RIGHT_MULTIPLE):
            assert self.scalar is not None
            return ElementaryOp(self.kind, self.i, self.j, scalar=-self.scalar)
        if self.kind in (OpKind.SCALE_ROW_LEFT, OpKind.SCALE_COL_RIGHT):
            assert self.scalar is not None
            return ElementaryOp(self.kind, self.i, scalar=self.scalar.ring.inverse(self.scalar))
        if self.kind in (OpKind.ROW_BLOCK, OpKind.COL_BLOCK):
            return ElementaryOp(self.kind, self.i, self.j, block=self.block_inverse, block_inverse=self.block)
        return self

    def describe(self) -> dict[str, object]:
        """Plain dict with element text, for JSON transcripts."""
        out: dict[str, object] = {"kind": self.kind.value, "i": self.i}
        if self.j is not None:
            out["j"] = self.j
        if self.scalar is not None:
            out["scalar"] = str(self.scalar)
        if self.block is not None and self.block_inverse is not None:
            out["block"] = [[str(self.block[0]), str(self.block[1])], [str(self.block[2]), str(self.block[3])]]
            out["inverse"] = [
                [str(self.block_inverse[0]), str(self.block_inverse[1])],
                [str(self.block_inverse[2]), str(self.block_inverse[3])],
            ]
        return out


def apply(op: ElementaryOp, m: Matrix) -> Matrix:
    """Apply one operation, rows from the left and columns from the right."""
    limit = m.rows if op.side == "left" else m.cols
    for k in op.indices():
        if not 0 <= k < limit:
            raise IndexOutOfRangeError(f"{op.kind.value} index {k} outside a {m.rows}x{m.cols} matrix")
    rows = m.to_rows()
    i, j = op.i, op.j
    lam = op.scalar

    if op.kind is OpKind.ADD_LEFT_MULTIPLE:
        rows[i] = [a + lam * b for a, b in zip(rows[i], rows[j])]
    elif op.kind is OpKind.ADD_RIGHT_MULTIPLE:
        for r in rows:
            r[i] = r[i] + r[j] * lam
    elif op.kind is OpKind.SWAP_ROWS:
        rows[i], rows[j] = rows[j], rows[i]
    elif op.kind is OpKind.SWAP_COLS:
        for r in rows:
            r[i], r[j] = r[j], r[i]
    elif op.kind is OpKind.SCALE_ROW_LEFT:
        rows[i] = [lam * a for a in rows[i]]
    elif op.kind is OpKind.SCALE_COL_RIGHT:
        for r in rows:
            r[i] = r[i] * lam
    elif op.kind is OpKind.ROW_BLOCK:
        b00, b01, b10, b11 = op.block
        ri, rj = rows[i], rows[j]
        rows[i] = [b00 * x + b01 * y for x, y in zip(ri, rj)]
        rows[j] = [b10 * x + b11 * y for x, y in zip(ri, rj)]
    else:
        b00, b01, b10, b11 = op.block
        for r in rows:
            x, y = r[i], r[j]
            r[i], r[j] = x * b00 + y * b10, x * b01 + y * b11
    return Matrix.from_rows(m.ring, rows) if m.rows else m


def elementary(op: ElementaryOp, ring: Ring, n: int) -> Matrix:
    """The n x n matrix E of an operation (acting as E·A for rows, A·E for columns)."""
    return apply(op, Matrix.identity(ring, n))


@dataclass(frozen=True)
class OpTranscript:
    """Row-side and column-side operations, each in application order."""
    left_ops: tuple[ElementaryOp, ...] = field(default_factory=tuple)
    right_ops: tuple[ElementaryOp, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if any(op.side != "left" for op in self.left_ops):
            raise PreconditionError("column operation recorded on the row side")
        if any(op.side != "right" for op in self.right_ops):
            raise PreconditionError("row operation recorded on the column side")

    def __len__(self) -> int:
        return len(self.left_ops) + len(self.right_ops)

    def record(self, op: ElementaryOp) -> "OpTranscript":
        if op.side == "left":
            return OpTranscript(self.left_ops + (op,), self.right_ops)
        return OpTranscript(self.left_ops, self.right_ops + (op,))

    def extend(self, ops: Iterable[ElementaryOp]) -> "OpTranscript":
        t = self
        for op in ops:
            t = t.record(op)
        return t

    def concat(self, other: "OpTranscript") -> "OpTranscript":
        """Transcript of running self and then other."""
        return OpTranscript(self.left_ops + other.left_ops, self.right_ops + other.right_ops)

    def describe(self) -> dict[str, list[dict[str, object]]]:
        return {
            "left_ops": [op.describe() for op in self.left_ops],
            "right_ops": [op.describe() for op in self.right_ops],
        }


def replay(t: OpTranscript, a: Matrix) -> Matrix:
    for op in t.left_ops:
        a = apply(op, a)
    for op in t.right_ops:
        a = apply(op, a)
    return a


def realize(t: OpTranscript, ring: Ring, size_left: int, size_right: int) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """
    (P, P⁻¹, Q, Q⁻¹) with replay(t, A) = P·A·Q.

    P⁻¹ and Q⁻¹ come from the recorded inverses applied in reverse order,
    never from a determinant.
    """
    p = Matrix.identity(ring, size_left)
    p_inv = Matrix.identity(ring, size_left)
    for op in t.left_ops:
        p = apply(op, p)
    for op in reversed(t.left_ops):
        p_inv = apply(op.inverse(), p_inv)
    q = Matrix.identity(ring, size_right)
    q_inv = Matrix.identity(ring, size_right)
    for op in t.right_ops:
        q = apply(op, q)
    for op in reversed(t.right_ops):
        q_inv = apply(op.inverse(), q_inv)
    return p, p_inv, q, q_inv

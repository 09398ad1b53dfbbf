"""Dense immutable matrices over a ring instance."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Any, Iterable, Optional, Sequence

from bezout.errors import (
    DescriptorMismatchError,
    IndexOutOfRangeError,
    PreconditionError,
    UnsupportedRingError,
)
from bezout.rings.base import Ring, RingElement


@dataclass(frozen=True)
class Matrix:
    """
    A rows x cols matrix stored row-major.

    Matrices are values: every operation returns a new matrix, and two
    matrices are equal iff ring, shape and canonical entries agree.
    """
    ring: Ring
    rows: int
    cols: int
    entries: tuple[RingElement, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise PreconditionError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise PreconditionError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        for e in self.entries:
            if e.ring != self.ring:
                raise DescriptorMismatchError(
                    f"entry over {e.ring.descriptor} in a matrix over {self.ring.descriptor}"
                )

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        return cls(ring, rows, cols, (ring.zero,) * (rows * cols))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        one, zero = ring.one, ring.zero
        return cls(ring, n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence[Any]]) -> "Matrix":
        """Build from nested rows of ring elements, raw values or ints."""
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise PreconditionError("ragged rows")
        entries = tuple(
            e if isinstance(e, RingElement) else ring.element(e) for r in rows for e in r
        )
        return cls(ring, len(rows), width, entries)

    @classmethod
    def random(cls, ring: Ring, rng: random.Random, rows: int, cols: int, bound: Optional[int] = None) -> "Matrix":
        """Seeded sample with entries from ring.random_element."""
        return cls(ring, rows, cols, tuple(ring.random_element(rng, bound) for _ in range(rows * cols)))

    @classmethod
    def parse(cls, ring: Ring, rows: Sequence[Sequence[str]]) -> "Matrix":
        """Build from nested rows of element text."""
        return cls.from_rows(ring, [[ring.parse(s) for s in r] for r in rows])

    @classmethod
    def diagonal_of(cls, ring: Ring, rows: int, cols: int, values: Sequence[RingElement]) -> "Matrix":
        m = [[ring.zero] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            m[i][i] = v
        return cls.from_rows(ring, m) if rows else cls.zeros(ring, rows, cols)

    # -- access -------------------------------------------------------------

    def _index(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRangeError(f"({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return i * self.cols + j

    def __getitem__(self, key: tuple[int, int]) -> RingElement:
        return self.entries[self._index(*key)]

    def row(self, i: int) -> list[RingElement]:
        if not 0 <= i < self.rows:
            raise IndexOutOfRangeError(f"row {i} outside a {self.rows}x{self.cols} matrix")
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[RingElement]:
        return [self[i, j] for i in range(self.rows)]

    def to_rows(self) -> list[list[RingElement]]:
        return [self.row(i) for i in range(self.rows)]

    def to_text(self) -> list[list[str]]:
        return [[self.ring.format(e) for e in r] for r in self.to_rows()]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def with_entry(self, i: int, j: int, value: RingElement) -> "Matrix":
        k = self._index(i, j)
        return Matrix(self.ring, self.rows, self.cols, self.entries[:k] + (value,) + self.entries[k + 1:])

    def diagonal(self) -> list[RingElement]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    # -- arithmetic ---------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.matmul(other)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise DescriptorMismatchError(f"{self.ring.descriptor} @ {other.ring.descriptor}")
        if self.cols != other.rows:
            raise PreconditionError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum((r[k] * other[k, j] for k in range(self.cols)), zero))
        return Matrix(self.ring, self.rows, other.cols, tuple(out))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square() and self == Matrix.identity(self.ring, self.rows)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_diagonal(self) -> bool:
        return all(
            self[i, j].is_zero() for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def is_lower_triangular(self) -> bool:
        """Entries strictly above the main diagonal are zero."""
        return all(self[i, j].is_zero() for i in range(self.rows) for j in range(i + 1, self.cols))

    def transpose(self) -> "Matrix":
        if not self.ring.commutative:
            raise UnsupportedRingError("transpose does not respect products over a noncommutative ring")
        return Matrix.from_rows(self.ring, [self.column(j) for j in range(self.cols)])

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> "Matrix":
        rs, cs = list(row_idx), list(col_idx)
        if not rs:
            return Matrix.zeros(self.ring, 0, len(cs))
        return Matrix.from_rows(self.ring, [[self[i, j] for j in cs] for i in rs])

    # -- determinants and minors (commutative only) --------------------------

    def determinant(self) -> RingElement:
        """Cofactor expansion along the first row."""
        if not self.ring.commutative:
            raise UnsupportedRingError(f"no determinant over {self.ring.descriptor}")
        if not self.is_square():
            raise PreconditionError(f"determinant of a {self.rows}x{self.cols} matrix")
        return _det(self.ring, self.to_rows())

    def minors(self, k: int) -> list[RingElement]:
        """All k x k minors."""
        if not 1 <= k <= min(self.rows, self.cols):
            raise PreconditionError(f"no {k}x{k} minors in a {self.rows}x{self.cols} matrix")
        return [
            self.submatrix(rs, cs).determinant()
            for rs in combinations(range(self.rows), k)
            for cs in combinations(range(self.cols), k)
        ]

    def minor_gcd(self, k: int) -> RingElement:
        """Canonical gcd of the k x k minors (the k-th determinantal divisor)."""
        return reduce(self.ring.gcd, self.minors(k), self.ring.zero)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.to_text()) + "]"


def _det(ring: Ring, m: list[list[RingElement]]) -> RingElement:
    n = len(m)
    if n == 0:
        return ring.one
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ring.zero
    for j, a in enumerate(m[0]):
        if a.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in m[1:]]
        term = a * _det(ring, minor)
        total = total + term if j % 2 == 0 else total - term
    return total

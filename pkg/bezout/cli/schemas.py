"""
JSON documents read and written by the command line.

Ring values are carried as strings in the rings text codec so big
integers and rationals survive any JSON tool.
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from bezout.matrices.matrix import Matrix
from bezout.rings.base import Ring


class MatrixDocument(BaseModel):
    """Input matrix: {"ring": ..., "rows": r, "cols": c, "entries": [[...], ...]}."""
    ring: Optional[str] = Field(None, description="Ring descriptor, e.g. 'int' or 'poly:5'")
    rows: int = Field(..., ge=0)
    cols: int = Field(..., ge=0)
    entries: List[List[str]] = Field(..., description="Row-major element text")

    @model_validator(mode="before")
    @classmethod
    def stringify_entries(cls, data: Any) -> Any:
        # plain JSON numbers are accepted as entries
        if isinstance(data, dict) and isinstance(data.get("entries"), list):
            data = dict(data)
            data["entries"] = [
                [str(e) for e in row] if isinstance(row, list) else row for row in data["entries"]
            ]
        return data

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixDocument":
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        return self

    def to_matrix(self, ring: Ring) -> Matrix:
        if self.rows == 0:
            return Matrix.zeros(ring, 0, self.cols)
        return Matrix.parse(ring, self.entries)

    @classmethod
    def from_matrix(cls, m: Matrix) -> "MatrixDocument":
        return cls(ring=m.ring.descriptor, rows=m.rows, cols=m.cols, entries=m.to_text())


class OpDocument(BaseModel):
    """One elementary operation of a transcript."""
    kind: str
    i: int
    j: Optional[int] = None
    scalar: Optional[str] = None
    block: Optional[List[List[str]]] = None
    inverse: Optional[List[List[str]]] = None


class TranscriptDocument(BaseModel):
    left_ops: List[OpDocument] = Field(default_factory=list)
    right_ops: List[OpDocument] = Field(default_factory=list)


class ReductionDocument(BaseModel):
    """Output of `reduce`; emitted only after every invariant has been re-checked."""
    ring: str
    algorithm: str
    P: List[List[str]]
    Pinv: List[List[str]]
    Q: List[List[str]]
    Qinv: List[List[str]]
    D: List[List[str]]
    chain: List[str]
    pivot_chain: Optional[List[str]] = None
    verified: bool
    transcript: Optional[TranscriptDocument] = None


class CertificateDocument(BaseModel):
    """Output of `check`: the verdict plus whichever witness fields the condition produces."""
    condition: str
    ring: Optional[str] = None
    verdict: bool
    modulus: Optional[int] = None
    pairs_checked: Optional[int] = None
    counterexample: Optional[List[str]] = None
    r: Optional[str] = None
    s: Optional[str] = None
    y: Optional[str] = None
    e: Optional[str] = None
    unit: Optional[str] = None
    audit: Optional[List[Dict[str, str]]] = None


class SuiteResult(BaseModel):
    name: str
    passed: bool
    cases: int = 0
    seconds: float = 0.0
    detail: Optional[str] = None


class SelftestReport(BaseModel):
    seed: int
    suites: List[SuiteResult]

    @property
    def passed(self) -> int:
        return sum(1 for s in self.suites if s.passed)

    @property
    def summary(self) -> str:
        return f"{self.passed}/{len(self.suites)} suites passed"


class InfoDocument(BaseModel):
    descriptor: str
    instance: str
    commutative: bool
    domain: bool
    euclidean: bool


class ErrorDocument(BaseModel):
    """Error document printed on stdout before a nonzero exit."""
    error: str = Field(..., description="Error type")
    message: str = Field(..., description="Error message")

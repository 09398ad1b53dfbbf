"""
Dense matrices and elementary operations.

Features:
- Immutable ``Matrix`` values with products, minors and determinants
- Elementary row/column operations with explicit inverses
- Transcripts that realize (P, P⁻¹, Q, Q⁻¹) by replay
- Explicit 2x2 factorizations into elementary matrices
"""
from bezout.matrices.elementary import (
    ElementaryOp,
    OpKind,
    OpTranscript,
    apply,
    elementary,
    realize,
    replay,
)
from bezout.matrices.identities import (
    PivotIdentity,
    UnitProductFactorization,
    companion_factorization,
    unit_pivot_identity,
    unit_product_factorization,
    two_sided_unit_witness,
)
from bezout.matrices.matrix import Matrix

__all__ = [
    "ElementaryOp",
    "OpKind",
    "OpTranscript",
    "apply",
    "elementary",
    "realize",
    "replay",
    "PivotIdentity",
    "UnitProductFactorization",
    "companion_factorization",
    "unit_pivot_identity",
    "unit_product_factorization",
    "two_sided_unit_witness",
    "Matrix",
]

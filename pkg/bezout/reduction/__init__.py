"""
Hermite and diagonal reduction over the ring instances.

Features:
- Row gcd steps, unimodular completion and Hermite triangularization
- Kaplansky witnesses for 2x2 lower-triangular blocks
- Diagonal reduction with a verified divisibility chain
- Pivot-growth loop and reduction modulo the Jacobson radical
"""
from bezout.reduction.diagonal import ReductionResult, diagonal_reduce, verify_reduction
from bezout.reduction.hermite import hermite_triangularize, row_gcd_step, unimodular_completion
from bezout.reduction.jacobson import image_mod_jacobson, lift_op, reduce_mod_jacobson
from bezout.reduction.kaplansky import KaplanskyWitness, kaplansky_step
from bezout.reduction.pivot_loop import mspec_pivot_loop

ALGORITHMS = {
    "diagonal": diagonal_reduce,
    "mspec-loop": mspec_pivot_loop,
    "mod-jacobson": reduce_mod_jacobson,
}

__all__ = [
    "ALGORITHMS",
    "ReductionResult",
    "diagonal_reduce",
    "verify_reduction",
    "hermite_triangularize",
    "row_gcd_step",
    "unimodular_completion",
    "image_mod_jacobson",
    "lift_op",
    "reduce_mod_jacobson",
    "KaplanskyWitness",
    "kaplansky_step",
    "mspec_pivot_loop",
]

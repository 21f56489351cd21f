"""
Arithmétique exacte : GF(p), GF(p)[x] et matrices
"""

from polyhnf.algebra.scalar import (
    MINUS_INFINITY,
    Degree,
    FieldElement,
    Poly,
    Prime,
    fe_inv,
    is_prime,
    poly_divrem,
    poly_dot,
    poly_exact_div,
    poly_monic,
    poly_mul,
    poly_product,
)
from polyhnf.algebra.polymat import (
    ConstMat,
    PolyMat,
    Shift,
    cm_completion,
    cm_det,
    cm_inv,
    cm_mul,
    cm_rank,
    pm_cdeg,
    pm_cdeg_shifted,
    pm_constant,
    pm_evaluate,
    pm_leading_matrix,
    pm_mul,
    pm_mul_const,
    pm_rdeg,
    pm_rdeg_shifted,
    shift_sum,
)

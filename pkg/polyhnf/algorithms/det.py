"""
════════════════════════════════════════════════════════════
DÉTERMINANT - Triangularisation par blocs récursive
════════════════════════════════════════════════════════════

A·U = [[B1, 0], [*, B2]] avec U = [Uℓ Ur] unimodulaire, donc
det(A) = det(B1)·det(B2)·det(V), V = U^{-1}. det(V) est une constante,
obtenue sur les termes constants de Ur et Vu seulement.
"""

import logging
from typing import Optional, Sequence

from polyhnf.algebra.polymat import (
    ConstMat,
    PolyMat,
    cm_completion,
    cm_det,
    cm_mul,
    cm_rank,
    pm_cdeg,
    pm_constant,
    pm_evaluate,
    pm_mul,
)
from polyhnf.algebra.scalar import FieldElement, Poly, fe_inv, poly_product
from polyhnf.algorithms.bases import column_basis_ext
from polyhnf.algorithms.linearize import smooth
from polyhnf.errors import DimensionMismatchError, RankDeficiencyError, SingularMatrixError


def unimodular_det_constants(Ur0: ConstMat, Vu0: ConstMat) -> FieldElement:
    """d_V = det(Vu0·Uℓ*) / det([Uℓ* Ur0]), Uℓ* complétion de Ur0"""
    n, k = Ur0.shape
    if cm_rank(Ur0) != k:
        raise RankDeficiencyError(f"unimodular_det_constants: rang(Ur0) < {k}")
    completion = cm_completion(Ur0, Vu0)
    numerator = cm_det(cm_mul(Vu0, completion))
    denominator = cm_det(completion.hstack(Ur0))
    return numerator * fe_inv(denominator, Ur0.p) % Ur0.p


def determinant_rec(A: PolyMat, _level: int = 0) -> Poly:
    """det(A) exact, coefficient dominant compris"""
    if not A.is_square() or A.nrows == 0:
        raise DimensionMismatchError(f"determinant_rec: matrice {A.shape} non carrée")
    n = A.nrows
    if n == 1:
        if A[0, 0].is_zero():
            raise SingularMatrixError("determinant_rec: entrée 1x1 nulle")
        return A[0, 0]

    s = pm_cdeg(A)
    if any(not isinstance(d, int) for d in s):
        raise SingularMatrixError("determinant_rec: colonne nulle, matrice singulière")
    k = (n + 1) // 2
    Au, Ad = A.top(k), A.bottom(k)
    ext = column_basis_ext(Au, s)
    B2 = pm_mul(Ad, ext.kernel_basis)
    d_V = unimodular_det_constants(pm_constant(ext.kernel_basis), pm_constant(ext.right_factor))
    logging.debug(f"determinant_rec: niveau {_level}, {n} = {k} + {n - k}, d_V = {d_V}")
    det_B1 = determinant_rec(ext.column_basis, _level + 1)
    det_B2 = determinant_rec(B2, _level + 1)
    return (det_B1 * det_B2).scale(d_V)


def determinant(A: PolyMat) -> Poly:
    """det(A) : lissage des degrés puis récursion"""
    if not A.is_square() or A.nrows == 0:
        raise DimensionMismatchError(f"determinant: matrice {A.shape} non carrée")
    C, _ = smooth(A)
    return determinant_rec(C)


def det_fastpath_diag(A: PolyMat, diag: Sequence[Poly], alpha: int = 0) -> Optional[Poly]:
    """λ·Πd_i avec λ = det(A(α)) / (Πd_i)(α), ou None si (Πd_i)(α) = 0"""
    if len(diag) != A.nrows:
        raise DimensionMismatchError(f"det_fastpath_diag: {len(diag)} entrées diagonales, {A.nrows} attendues")
    product = poly_product(diag, A.p)
    value = product.evaluate(alpha)
    if value == 0:
        return None
    lam = cm_det(pm_evaluate(A, alpha)) * fe_inv(value, A.p)
    return product.scale(lam)

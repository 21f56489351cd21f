"""Tests du déterminant par triangularisation récursive."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import bidiagonal_unimodular, nonsingular_matrices, random_nonsingular, random_unimodular
from polyhnf.algebra.polymat import ConstMat, PolyMat, cm_det, pm_constant, pm_mul
from polyhnf.algebra.scalar import Poly, poly_product
from polyhnf.algorithms.det import det_fastpath_diag, determinant, determinant_rec, unimodular_det_constants
from polyhnf.algorithms.hnf import hermite_diagonal
from polyhnf.errors import DimensionMismatchError, RankDeficiencyError, SingularMatrixError
from polyhnf.oracle import det_oracle

Z7_DET_5X5 = "4x^10+2x^9+4x^8+5x^7+x^6+x^5+6x^4+x^3+2x^2+6x+3"


def test_unimodular_constants_of_reference_split():
    Ur0 = ConstMat([[3, 0], [0, 0], [0, 0], [-3, 0], [0, 1]], 7)
    Vu0 = ConstMat([[1, 0, 0, 1, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]], 7)
    assert unimodular_det_constants(Ur0, Vu0) == 2


def test_unimodular_constants_of_inner_split():
    Ur1 = ConstMat([[0], [0], [1]], 7)
    Vu1 = ConstMat([[1, 2, 0], [0, 1, 0]], 7)
    assert unimodular_det_constants(Ur1, Vu1) == 1


def test_unimodular_constants_reject_rank_deficient_kernel():
    Ur0 = ConstMat([[0, 0], [0, 0], [1, 2]], 7)
    Vu0 = ConstMat([[1, 0, 0]], 7)
    with pytest.raises(RankDeficiencyError):
        unimodular_det_constants(Ur0, Vu0)


def test_lower_block_of_reference_split(z7_matrix_5x5):
    Ur = PolyMat.from_strings([["3", "0"], ["0", "0"], ["0", "x^2"], ["-3", "0"], ["0", "1"]], 7)
    assert pm_mul(z7_matrix_5x5.top(3), Ur).is_zero()
    B2 = pm_mul(z7_matrix_5x5.bottom(3), Ur)
    assert B2 == PolyMat.from_strings([["-x^2+3", "-2x^4-x^2"], ["2x^2", "-2x^4+3"]], 7)
    # -(x^2-3)(x^4+3)
    expected = (Poly.from_string("x^2-3", 7) * Poly.from_string("x^4+3", 7)).scale(6)
    assert det_oracle(B2) == expected


def test_determinant_of_reference_5x5(z7_matrix_5x5):
    expected = Poly.from_string(Z7_DET_5X5, 7)
    assert determinant_rec(z7_matrix_5x5) == expected
    assert determinant(z7_matrix_5x5) == expected
    assert det_oracle(z7_matrix_5x5) == expected


def test_determinant_of_reference_3x3(z7_matrix_3x3):
    assert determinant(z7_matrix_3x3) == det_oracle(z7_matrix_3x3)


def test_unimodular_determinant_is_constant():
    assert determinant(bidiagonal_unimodular(5, 4, 97)) == Poly.one(97)


def test_determinant_keeps_leading_coefficient():
    A = PolyMat.from_strings([["3x+1", "0"], ["5", "2x"]], 7)
    assert determinant(A) == Poly.from_string("6x^2+2x", 7)


def test_singular_and_rectangular_inputs_rejected():
    with pytest.raises(SingularMatrixError):
        determinant(PolyMat.from_strings([["x", "x"], ["1", "1"]], 7))
    with pytest.raises(DimensionMismatchError):
        determinant(PolyMat.zeros(2, 3, 7))


def test_fast_path_from_diagonal(z7_matrix_3x3):
    diagonal = hermite_diagonal(z7_matrix_3x3)
    # (Πd_i)(0) = 0 : le diagonal contient un facteur x
    assert det_fastpath_diag(z7_matrix_3x3, diagonal, 0) is None
    assert det_fastpath_diag(z7_matrix_3x3, diagonal, 3) == det_oracle(z7_matrix_3x3)


@pytest.mark.property_based
@given(nonsingular_matrices(max_dim=5, max_deg=4))
@settings(max_examples=40, deadline=None)
def test_determinant_matches_oracle(A):
    assert determinant(A) == det_oracle(A)


@pytest.mark.property_based
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from((3, 7, 97)), st.integers(1, 4))
@settings(max_examples=25, deadline=None)
def test_determinant_is_multiplicative(seed, p, n):
    rng = random.Random(seed)
    A = random_nonsingular(rng, n, 3, p)
    W = random_unimodular(rng, n, p)
    assert determinant(pm_mul(A, W)) == determinant(A) * det_oracle(W)


@pytest.mark.property_based
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from((2, 3, 7, 97)), st.integers(1, 5))
@settings(max_examples=50, deadline=None)
def test_unimodular_determinant_is_constant_term_determinant(seed, p, n):
    U = random_unimodular(random.Random(seed), n, p, steps=8)
    d = determinant(U)
    assert d.deg == 0
    assert d == Poly.constant(cm_det(pm_constant(U)), p)


@pytest.mark.property_based
@given(nonsingular_matrices(max_dim=4, max_deg=3), st.integers(0, 96))
@settings(max_examples=50, deadline=None)
def test_fast_path_at_random_point(A, alpha):
    result = det_fastpath_diag(A, hermite_diagonal(A), alpha % A.p)
    product = poly_product(hermite_diagonal(A), A.p)
    if product.evaluate(alpha % A.p) == 0:
        assert result is None
    else:
        assert result == det_oracle(A)

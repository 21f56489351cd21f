"""Tests des bases d'approximants, de noyau et de colonnes."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_full_row_rank
from polyhnf.algebra.polymat import PolyMat, cm_det, cm_rank, pm_cdeg, pm_cdeg_shifted, pm_leading_matrix, pm_mul
from polyhnf.algebra.scalar import Poly, fe_inv, poly_monic
from polyhnf.algorithms.bases import (
    approximant_basis,
    column_basis,
    column_basis_ext,
    kernel_basis,
    right_factor,
)
from polyhnf.oracle import det_oracle, equiv_check, kernel_vector_oracle
from polyhnf.errors import (
    NotInColumnModuleError,
    PreconditionError,
    RankDeficiencyError,
)

Z7_KERNEL_SHIFT = (5, 5, 4)


@pytest.fixture
def z7_kernel_vector() -> PolyMat:
    return PolyMat.from_strings([
        ["6x^6+4x^5+5x^4+3x^3+4x^2+1"],
        ["4x^4+5x^3+x^2+6x"],
        ["4x^7+4x^6+4x^5+4x^3+5x^2+3x+2"],
    ], 7)


# ──────────────────────────────────────────────────────────
# Approximants
# ──────────────────────────────────────────────────────────

def test_approximant_columns_vanish_to_order(z7_top_rows):
    P = approximant_basis(z7_top_rows, 15, Z7_KERNEL_SHIFT)
    residual = pm_mul(z7_top_rows, P)
    assert all(f.truncate(15).is_zero() for row in residual.entries for f in row)
    assert cm_rank(pm_leading_matrix(P, Z7_KERNEL_SHIFT)) == 3


def test_approximant_order_must_be_positive(z7_top_rows):
    with pytest.raises(PreconditionError):
        approximant_basis(z7_top_rows, 0, Z7_KERNEL_SHIFT)


# ──────────────────────────────────────────────────────────
# Noyaux
# ──────────────────────────────────────────────────────────

def test_kernel_of_reference_block(z7_top_rows, z7_kernel_vector):
    N = kernel_basis(z7_top_rows, Z7_KERNEL_SHIFT)
    assert N.shape == (3, 1)
    assert pm_mul(z7_top_rows, N).is_zero()
    assert pm_cdeg_shifted(N, Z7_KERNEL_SHIFT) == (11,)
    unit = N[0, 0].lc * fe_inv(6, 7) % 7
    assert N == z7_kernel_vector * unit


def test_kernel_rejects_small_shift(z7_top_rows):
    with pytest.raises(PreconditionError):
        kernel_basis(z7_top_rows, (4, 5, 4))


def test_kernel_of_rank_deficient_rows_raises():
    F = PolyMat.from_strings([["x", "1", "x+1"], ["2x", "2", "2x+2"]], 7)
    with pytest.raises(RankDeficiencyError):
        kernel_basis(F, (1, 1, 1))


def test_kernel_of_square_nonsingular_is_empty():
    F = PolyMat.from_strings([["x", "1"], ["0", "1"]], 7)
    N = kernel_basis(F, (1, 1))
    assert N.shape == (2, 0)


@pytest.mark.property_based
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from((2, 3, 7, 97)), st.integers(2, 4))
@settings(max_examples=30, deadline=None)
def test_kernel_vector_matches_minor_oracle(seed, p, n):
    rng = random.Random(seed)
    F = random_full_row_rank(rng, n - 1, n, 3, p)
    s = tuple(d if isinstance(d, int) else 0 for d in pm_cdeg(F))
    N = kernel_basis(F, s)
    expected = kernel_vector_oracle(F)
    lead = next(f for f in N.column(0) if f)
    assert N == expected * lead.lc


@pytest.mark.property_based
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from((3, 7, 97)))
@settings(max_examples=30, deadline=None)
def test_kernel_basis_is_reduced(seed, p):
    rng = random.Random(seed)
    F = random_full_row_rank(rng, 2, 4, 3, p)
    s = tuple(d if isinstance(d, int) else 0 for d in pm_cdeg(F))
    N = kernel_basis(F, s)
    assert N.shape == (4, 2)
    assert pm_mul(F, N).is_zero()
    assert cm_rank(pm_leading_matrix(N, s)) == 2
    assert sum(pm_cdeg_shifted(N, s)) <= sum(s)


# ──────────────────────────────────────────────────────────
# Bases de colonnes et facteur droit
# ──────────────────────────────────────────────────────────

def test_column_basis_of_reference_block(z7_top_rows):
    B = column_basis(z7_top_rows)
    assert B.shape == (2, 2)
    assert cm_det(pm_leading_matrix(B)) != 0
    # même module que [[5x+5, 1], [3, 1]]
    assert poly_monic(det_oracle(B))[0] == Poly.from_string("x+6", 7)
    assert equiv_check(B, PolyMat.from_strings([["5x+5", "1"], ["3", "1"]], 7))
    assert sum(pm_cdeg(B)) <= sum(Z7_KERNEL_SHIFT)
    V = right_factor(B, z7_top_rows)
    assert pm_mul(B, V) == z7_top_rows


def test_right_factor_expresses_third_column():
    B = PolyMat.from_strings([["5x+5", "1"], ["3", "1"]], 7)
    a3 = PolyMat.from_strings([["3"], ["x^4+5x^3+6x^2+5x"]], 7)
    V = right_factor(B, a3)
    assert V == PolyMat.from_strings([["4x^3+3x^2+6x+5"], ["x^4+4x^2+x+6"]], 7)


def test_right_factor_outside_module_raises():
    with pytest.raises(NotInColumnModuleError):
        right_factor(PolyMat.from_strings([["x"]], 7), PolyMat.from_strings([["1"]], 7))


def test_column_basis_rank_deficient_raises():
    with pytest.raises(RankDeficiencyError):
        column_basis(PolyMat.from_strings([["x", "1"], ["2x", "2"]], 7))


def test_column_basis_extension_is_consistent(z7_top_rows):
    ext = column_basis_ext(z7_top_rows, Z7_KERNEL_SHIFT)
    assert pm_mul(ext.column_basis, ext.right_factor) == z7_top_rows
    assert pm_mul(z7_top_rows, ext.kernel_basis).is_zero()
    assert ext.kernel_basis.shape == (3, 1)


@pytest.mark.property_based
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from((2, 7, 97)), st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_column_basis_factorizes_random_blocks(seed, p, m):
    rng = random.Random(seed)
    Au = random_full_row_rank(rng, m, m + 2, 3, p)
    B = column_basis(Au)
    assert cm_det(pm_leading_matrix(B)) != 0
    assert pm_mul(B, right_factor(B, Au)) == Au

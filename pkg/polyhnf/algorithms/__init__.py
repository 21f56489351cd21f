"""
Algorithmes : bases, réduction, linéarisation, Hermite, déterminant
"""

from polyhnf.algorithms.bases import (
    approximant_basis,
    column_basis,
    column_basis_ext,
    kernel_basis,
    right_factor,
)
from polyhnf.algorithms.reduce import column_reduce, popov_normalize
from polyhnf.algorithms.linearize import (
    column_linearize,
    compress,
    dominant_permutation,
    generic_det_bound,
    parlin_rows,
    row_linearize,
    smooth,
    smooth_for_hermite,
)
from polyhnf.algorithms.hnf import hermite, hermite_diagonal, hermite_known_degree, is_hermite
from polyhnf.algorithms.det import (
    det_fastpath_diag,
    determinant,
    determinant_rec,
    unimodular_det_constants,
)

"""
════════════════════════════════════════════════════════════
HERMITE - Diagonale, degrés connus, forme complète
════════════════════════════════════════════════════════════

Forme de Hermite en colonnes : H = A·U avec U unimodulaire, H triangulaire
inférieure, diagonale unitaire, deg h_ij < deg h_ii pour j < i.
"""

import logging
from typing import Sequence, Tuple

from polyhnf.algebra.polymat import PolyMat, pm_cdeg, pm_mul
from polyhnf.algebra.scalar import Poly, poly_monic
from polyhnf.algorithms.bases import column_basis, kernel_basis
from polyhnf.algorithms.linearize import compress, parlin_rows, smooth_for_hermite
from polyhnf.algorithms.reduce import column_reduce, popov_normalize
from polyhnf.errors import DimensionMismatchError, PreconditionError, SingularMatrixError


def _square(A: PolyMat, op: str) -> int:
    if not A.is_square() or A.nrows == 0:
        raise DimensionMismatchError(f"{op}: matrice {A.shape} non carrée")
    return A.nrows


def _column_shift(A: PolyMat) -> Tuple[int, ...]:
    degrees = pm_cdeg(A)
    if any(not isinstance(d, int) for d in degrees):
        raise SingularMatrixError("colonne nulle : matrice singulière")
    return degrees


# ──────────────────────────────────────────────────────────
# Entrées diagonales
# ──────────────────────────────────────────────────────────

def hermite_diagonal(A: PolyMat, _level: int = 0) -> Tuple[Poly, ...]:
    """Entrées diagonales unitaires de la forme de Hermite de A.

    A = [Au; Ad] coupée à ⌈n/2⌉ lignes : la forme triangulaire par blocs
    [[B1, 0], [*, B2]] s'obtient avec B1 base de colonnes de Au et
    B2 = Ad·N, N base de noyau de Au pour le shift cdeg(A).
    """
    n = _square(A, "hermite_diagonal")
    if n == 1:
        if A[0, 0].is_zero():
            raise SingularMatrixError("hermite_diagonal: entrée 1x1 nulle")
        return (poly_monic(A[0, 0])[0],)

    s = _column_shift(A)
    k = (n + 1) // 2
    Au, Ad = A.top(k), A.bottom(k)
    B1 = column_basis(Au)
    N = kernel_basis(Au, s)
    B2 = pm_mul(Ad, N)
    logging.debug(f"hermite_diagonal: niveau {_level}, {n} = {k} + {n - k}")
    return hermite_diagonal(B1, _level + 1) + hermite_diagonal(B2, _level + 1)


# ──────────────────────────────────────────────────────────
# Forme complète à degrés diagonaux connus
# ──────────────────────────────────────────────────────────

def hermite_known_degree(A: PolyMat, delta: Sequence[int]) -> PolyMat:
    """Forme de Hermite de A connaissant les degrés diagonaux delta"""
    _square(A, "hermite_known_degree")
    linearized, info = parlin_rows(A, delta)
    size = info.dim
    p = A.p

    # D·Ā est 0-réduite ⇔ Ā est -s_d-réduite
    scaling = [info.delta_bar - s for s in info.shift]
    scaled = PolyMat.from_rows(
        [[f.shift(e) for f in row] for row, e in zip(linearized.entries, scaling)], p, ncols=size
    )
    reduced = column_reduce(scaled, (0,) * size)
    R_hat = PolyMat.from_rows(
        [[f.quo_x(e) for f in row] for row, e in zip(reduced.entries, scaling)], p, ncols=size
    )

    try:
        normalized = popov_normalize(R_hat, tuple(-s for s in info.shift))
    except PreconditionError as exc:
        raise PreconditionError(f"hermite_known_degree: degrés diagonaux {tuple(delta)} incorrects ({exc.detail})")
    H = compress(info.expansion, normalized, info)
    if not is_hermite(H):
        raise PreconditionError(f"hermite_known_degree: degrés diagonaux {tuple(delta)} incorrects")
    return H


def hermite(A: PolyMat) -> PolyMat:
    """Forme de Hermite de A non singulière"""
    n = _square(A, "hermite")
    B, info = smooth_for_hermite(A)
    m = info.expanded_dim
    delta = tuple(d.deg for d in hermite_diagonal(B))
    logging.info(f"hermite: degrés diagonaux {delta}, degré du déterminant {sum(delta)}")
    HB = hermite_known_degree(B, delta)
    return HB.submatrix(range(m - n, m), range(m - n, m))


def is_hermite(H: PolyMat) -> bool:
    """Triangulaire inférieure, diagonale unitaire, deg h_ij < deg h_ii pour j < i"""
    if not H.is_square():
        return False
    n = H.nrows
    for i in range(n):
        head = H[i, i]
        if not head.is_monic():
            return False
        for j in range(n):
            if j > i and not H[i, j].is_zero():
                return False
            if j < i and H[i, j].deg >= head.deg:
                return False
    return True

"""
════════════════════════════════════════════════════════════
REDUCTION - Réduction en colonnes décalée et normalisation de Popov
════════════════════════════════════════════════════════════
"""

import logging
from typing import Dict, List, Sequence, Tuple

from polyhnf.algebra.polymat import PolyMat, cm_inv, pm_cdeg_shifted, pm_leading_matrix, pm_mul_const
from polyhnf.algebra.scalar import Degree, Poly, fe_inv
from polyhnf.errors import DimensionMismatchError, PreconditionError, SingularMatrixError


def _pivot(column: Sequence[Poly], s: Sequence[int]) -> Tuple[Degree, int]:
    """(s-degré, ligne pivot) ; la ligne pivot est la dernière atteignant le s-degré"""
    best, row = None, -1
    for i, (f, si) in enumerate(zip(column, s)):
        if f:
            d = f.deg + si
            if best is None or d >= best:
                best, row = d, i
    return best, row


def column_reduce(A: PolyMat, s: Sequence[int]) -> PolyMat:
    """Forme s-réduite de A (carrée non singulière), équivalente à droite.

    Itération de Mulders-Storjohann : tant que deux colonnes partagent leur
    ligne pivot, celle de plus grand s-degré (à égalité, d'indice le plus
    grand) est réduite par l'autre. Le résultat est en forme de Popov faible,
    donc sa matrice dominante décalée est inversible.
    """
    n = A.nrows
    if not A.is_square():
        raise DimensionMismatchError(f"column_reduce: matrice {A.shape} non carrée")
    if len(s) != n:
        raise DimensionMismatchError(f"shift de longueur {len(s)}, {n} attendue")
    cols: List[List[Poly]] = [list(c) for c in A.columns()]
    owner: Dict[int, int] = {}
    steps = 0

    for start in range(n):
        j = start
        while True:
            d, row = _pivot(cols[j], s)
            if row < 0:
                raise SingularMatrixError(f"column_reduce: la colonne {j} s'annule, matrice singulière")
            other = owner.get(row)
            if other is None:
                owner[row] = j
                break
            d_other, _ = _pivot(cols[other], s)
            if d < d_other or (d == d_other and j < other):
                # la colonne déjà placée est réduite par j, qui prend sa place
                owner[row] = j
                j, other = other, j
                d, d_other = d_other, d
            target, source = cols[j], cols[other]
            c = target[row].lc * fe_inv(source[row].lc, A.p)
            shift = target[row].deg - source[row].deg
            cols[j] = [a.sub_scaled_shift(b, c, shift) for a, b in zip(target, source)]
            steps += 1

    logging.debug(f"column_reduce: {n}x{n}, {steps} opérations élémentaires")
    return PolyMat.from_columns(cols, A.p, nrows=n)


def popov_normalize(R: PolyMat, s: Sequence[int]) -> PolyMat:
    """R · lm_s(R)^{-1} pour R s-réduite de s-degré uniforme"""
    degrees = pm_cdeg_shifted(R, s)
    if len(set(degrees)) > 1:
        raise PreconditionError(f"popov_normalize: s-degrés de colonnes non uniformes {degrees}")
    try:
        inverse = cm_inv(pm_leading_matrix(R, s))
    except SingularMatrixError:
        raise PreconditionError("popov_normalize: matrice dominante décalée singulière")
    return pm_mul_const(R, inverse)

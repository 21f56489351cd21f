"""
════════════════════════════════════════════════════════════
BASES - Approximants, noyaux et bases de colonnes
════════════════════════════════════════════════════════════

Bases d'approximants par élimination ordre par ordre, bases de noyau
s-minimales déduites d'une base d'approximants d'ordre somme(s) + 1,
bases de colonnes par élimination euclidienne puis réduction, et facteur
droit par élimination sans fraction.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np

from polyhnf.algebra.polymat import PolyMat, pm_cdeg, pm_cdeg_shifted, pm_mul, shift_sum
from polyhnf.algebra.scalar import MINUS_INFINITY, Poly, fe_inv, poly_exact_div
from polyhnf.algorithms.reduce import column_reduce
from polyhnf.config import settings
from polyhnf.errors import (
    DimensionMismatchError,
    NotInColumnModuleError,
    PreconditionError,
    RankDeficiencyError,
    SingularMatrixError,
    StructuralError,
)
from polyhnf.schemas.bases import ColumnBasisExt


# ──────────────────────────────────────────────────────────
# Bases d'approximants
# ──────────────────────────────────────────────────────────

def _coefficient_tensor(F: PolyMat, order: int) -> np.ndarray:
    """Coefficients de F tronqués à x^order, rangés par colonne : (n, m, order)"""
    tensor = np.zeros((F.ncols, F.nrows, order), dtype=np.int64)
    for i, row in enumerate(F.entries):
        for j, f in enumerate(row):
            coeffs = f.coeffs[:order]
            tensor[j, i, :len(coeffs)] = coeffs
    return tensor


def approximant_basis(F: PolyMat, order: int, s: Sequence[int]) -> PolyMat:
    """Base d'approximants s-réduite de F à l'ordre `order`.

    Chaque colonne p vérifie F·p ≡ 0 mod x^order. Pour chaque coefficient
    k < order puis chaque ligne i, le pivot est la colonne de résidu non
    nul de plus petit degré décalé (à égalité, le plus petit indice) ; il
    élimine les autres colonnes puis est multiplié par x.
    """
    m, n = F.shape
    if order < 1:
        raise PreconditionError(f"ordre d'approximation {order} < 1")
    if len(s) != n:
        raise DimensionMismatchError(f"shift de longueur {len(s)}, {n} attendue")
    p = F.p

    residual = _coefficient_tensor(F, order)
    # basis[j] = colonne j de P, coefficients (n, order + 1)
    basis = np.zeros((n, n, order + 1), dtype=np.int64)
    for j in range(n):
        basis[j, j, 0] = 1
    degrees = list(s)

    for k in range(order):
        for i in range(m):
            values = residual[:, i, k]
            nonzero = np.nonzero(values)[0]
            if nonzero.size == 0:
                continue
            pivot = min(nonzero.tolist(), key=lambda j: (degrees[j], j))
            others = [j for j in nonzero.tolist() if j != pivot]
            if others:
                factors = (values[others] * fe_inv(int(values[pivot]), p)) % p
                residual[others] = (residual[others] - factors[:, None, None] * residual[pivot]) % p
                basis[others] = (basis[others] - factors[:, None, None] * basis[pivot]) % p
            residual[pivot, :, 1:] = residual[pivot, :, :-1].copy()
            residual[pivot, :, 0] = 0
            basis[pivot, :, 1:] = basis[pivot, :, :-1].copy()
            basis[pivot, :, 0] = 0
            degrees[pivot] += 1

    columns = [[Poly(basis[j, r].tolist(), p) for r in range(n)] for j in range(n)]
    return PolyMat.from_columns(columns, p, nrows=n)


# ──────────────────────────────────────────────────────────
# Bases de noyau
# ──────────────────────────────────────────────────────────

def _check_shift_dominates(F: PolyMat, s: Sequence[int]) -> None:
    if len(s) != F.ncols:
        raise DimensionMismatchError(f"shift de longueur {len(s)}, {F.ncols} attendue")
    for j, (d, sj) in enumerate(zip(pm_cdeg(F), s)):
        if d > sj:
            raise PreconditionError(f"cdeg(F)[{j}] = {d} dépasse le shift {sj}")


def kernel_basis(F: PolyMat, s: Sequence[int]) -> PolyMat:
    """Base de noyau s-minimale de F (m×n de rang m), de dimension n×(n-m).

    Les colonnes de s-degré < ordre d'une base d'approximants d'ordre
    somme(s) + 1 sont des vecteurs exacts du noyau. Si la base en contient
    trop peu, l'ordre est doublé (au plus KERNEL_ORDER_DOUBLINGS fois).
    """
    m, n = F.shape
    if m > n:
        raise RankDeficiencyError(f"noyau à droite d'une matrice {m}×{n} : rang plein en lignes impossible")
    _check_shift_dominates(F, s)
    expected = n - m
    order = max(shift_sum(s) + 1, 1)

    for attempt in range(settings.KERNEL_ORDER_DOUBLINGS + 1):
        P = approximant_basis(F, order, s)
        degrees = pm_cdeg_shifted(P, s)
        selected = [j for j, d in enumerate(degrees) if d < order]
        N = PolyMat.from_columns([P.column(j) for j in selected], F.p, nrows=n)
        if len(selected) > expected:
            raise RankDeficiencyError(
                f"noyau de dimension {len(selected)} > {expected} : F n'est pas de rang plein"
            )
        if len(selected) == expected:
            if not pm_mul(F, N).is_zero():
                raise StructuralError("colonne d'approximant hors du noyau")
            return N
        logging.warning(
            f"kernel_basis: {len(selected)}/{expected} colonnes à l'ordre {order}, "
            f"essai {attempt + 1}, ordre doublé"
        )
        order *= 2

    raise RankDeficiencyError(f"base de noyau incomplète après {settings.KERNEL_ORDER_DOUBLINGS} doublements")


# ──────────────────────────────────────────────────────────
# Bases de colonnes
# ──────────────────────────────────────────────────────────

def _triangular_basis(Au: PolyMat) -> List[List[Poly]]:
    """Élimination euclidienne sur les colonnes ; renvoie les m premières colonnes.

    Ligne par ligne, le pivot est l'entrée non nulle de plus petit degré
    (à égalité, la plus petite colonne) parmi les colonnes restantes.
    """
    m, n = Au.shape
    cols = [list(c) for c in Au.columns()]
    for i in range(m):
        while True:
            live = [j for j in range(i, n) if cols[j][i]]
            if not live:
                raise RankDeficiencyError(f"column_basis: ligne {i} dépendante, Au n'est pas de rang plein")
            pivot = min(live, key=lambda j: (cols[j][i].deg, j))
            cols[i], cols[pivot] = cols[pivot], cols[i]
            head = cols[i][i]
            rest = [j for j in range(i + 1, n) if cols[j][i]]
            if not rest:
                break
            for j in rest:
                q = cols[j][i] // head
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]
    return cols[:m]


def column_basis(Au: PolyMat) -> PolyMat:
    """Base de colonnes m×m de Au (rang plein en lignes), réduite en colonnes"""
    m, _ = Au.shape
    if m == 0:
        return PolyMat.zeros(0, 0, Au.p)
    L = PolyMat.from_columns(_triangular_basis(Au), Au.p, nrows=m)
    return column_reduce(L, (0,) * m)


def right_factor(B: PolyMat, A: PolyMat) -> PolyMat:
    """V polynomiale avec B·V = A, par Gauss-Jordan sans fraction sur [B | A]"""
    m = B.nrows
    if not B.is_square() or A.nrows != m:
        raise DimensionMismatchError(f"right_factor: B {B.shape}, A {A.shape}")
    p = B.p
    width = m + A.ncols
    work = [list(rb) + list(ra) for rb, ra in zip(B.entries, A.entries)]
    previous = Poly.one(p)

    for k in range(m):
        pivot = next((r for r in range(k, m) if work[r][k]), None)
        if pivot is None:
            raise SingularMatrixError("right_factor: B singulière")
        work[k], work[pivot] = work[pivot], work[k]
        head = work[k][k]
        for i in range(m):
            if i == k:
                continue
            factor = work[i][k]
            row = work[i]
            for j in range(width):
                if j == k:
                    continue
                if j < k and j != i:
                    # colonnes déjà éliminées : restent nulles
                    continue
                row[j] = poly_exact_div(head * row[j] - factor * work[k][j], previous)
            row[k] = Poly.zero(p)
        previous = head

    out = []
    for row in work:
        line = []
        for f in row[m:]:
            q, r = divmod(f, previous)
            if r:
                raise NotInColumnModuleError("colonnes de A hors du module engendré par B")
            line.append(q)
        out.append(line)
    return PolyMat.from_rows(out, p, ncols=A.ncols)


def column_basis_ext(Au: PolyMat, s: Sequence[int]) -> ColumnBasisExt:
    """(B1, Ur, Vu) : base de colonnes, base de noyau s-minimale, facteur droit"""
    _check_shift_dominates(Au, s)
    B1 = column_basis(Au)
    Ur = kernel_basis(Au, s)
    Vu = right_factor(B1, Au)
    logging.debug(
        f"column_basis_ext: Au {Au.nrows}x{Au.ncols}, cdeg(B1) = {pm_cdeg(B1)}, "
        f"{Ur.ncols} colonnes de noyau"
    )
    return ColumnBasisExt(column_basis=B1, kernel_basis=Ur, right_factor=Vu)

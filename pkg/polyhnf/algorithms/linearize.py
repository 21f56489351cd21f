"""
════════════════════════════════════════════════════════════
LINÉARISATION - Linéarisations partielles et lissage des degrés
════════════════════════════════════════════════════════════

Deux constructions distinctes, à ne pas confondre :

- parlin_rows : linéarisation des lignes guidée par les degrés diagonaux
  de la forme de Hermite (lignes découpées gardées ensemble, colonnes
  élémentaires (x^δ̄, -1)).
- smooth : linéarisation des colonnes puis des lignes, avec lignes et
  colonnes ajoutées en fin de matrice (-x^d au morceau précédent, 1 au
  nouveau). Le déterminant est conservé et A^{-1} est le bloc principal
  n×n de C^{-1}.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from polyhnf.algebra.polymat import PolyMat, pm_mul
from polyhnf.algebra.scalar import Poly
from polyhnf.errors import DimensionMismatchError, PreconditionError, StructuralError
from polyhnf.schemas.linearization import LinearizationInfo, SmoothInfo


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ──────────────────────────────────────────────────────────
# Linéarisation des lignes (degrés diagonaux connus)
# ──────────────────────────────────────────────────────────

def parlin_rows(A: PolyMat, delta: Sequence[int]) -> Tuple[PolyMat, LinearizationInfo]:
    """Linéarisation partielle des lignes de A selon delta"""
    n = A.nrows
    if not A.is_square():
        raise DimensionMismatchError(f"parlin_rows: matrice {A.shape} non carrée")
    if len(delta) != n:
        raise DimensionMismatchError(f"delta de longueur {len(delta)}, {n} attendue")
    if any(d < 0 for d in delta):
        raise PreconditionError(f"parlin_rows: degrés négatifs {tuple(delta)}")
    p = A.p

    delta_bar = 1 + sum(delta) // n
    alpha = tuple(_ceil_div(d, delta_bar) if d > 0 else 1 for d in delta)
    beta = tuple(d - (a - 1) * delta_bar if d > 0 else 0 for d, a in zip(delta, alpha))
    shift: List[int] = []
    for a, b in zip(alpha, beta):
        shift.extend([delta_bar] * (a - 1) + [b])
    size = sum(alpha)
    offsets = [sum(alpha[:i]) for i in range(n)]
    colmap = tuple(o + a - 1 for o, a in zip(offsets, alpha))

    zero = Poly.zero(p)
    expansion = [[zero] * size for _ in range(n)]
    for i, (o, a) in enumerate(zip(offsets, alpha)):
        for k in range(a):
            expansion[i][o + k] = Poly.monomial(1, k * delta_bar, p)

    grid = [[zero] * size for _ in range(size)]
    for i, (o, a) in enumerate(zip(offsets, alpha)):
        # chiffres en base x^δ̄, la dernière ligne du bloc garde le quotient
        for k in range(a):
            last = k == a - 1
            for j in range(n):
                f = A[i, j]
                grid[o + k][colmap[j]] = f.quo_x(k * delta_bar) if last else f.chunk(k, delta_bar)
        for k in range(a - 1):
            grid[o + k][o + k] = Poly.monomial(1, delta_bar, p)
            grid[o + k + 1][o + k] = Poly.constant(-1, p)

    info = LinearizationInfo(
        delta_bar=delta_bar,
        alpha=alpha,
        beta=beta,
        shift=tuple(shift),
        expansion=PolyMat.from_rows(expansion, p, ncols=size),
        colmap=colmap,
    )
    return PolyMat.from_rows(grid, p, ncols=size), info


def compress(E: PolyMat, M: PolyMat, info: LinearizationInfo) -> PolyMat:
    """Sous-matrice de E·M formée des colonnes colmap"""
    if E.ncols != M.nrows or M.ncols != info.dim:
        raise DimensionMismatchError(f"compress: E {E.shape}, M {M.shape}, ñ = {info.dim}")
    return pm_mul(E, M.submatrix(range(M.nrows), info.colmap))


# ──────────────────────────────────────────────────────────
# Permutation dominante
# ──────────────────────────────────────────────────────────

def dominant_permutation(A: PolyMat) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    """Permutations lignes / colonnes plaçant des degrés dominants sur la diagonale.

    À chaque étape, l'entrée de d̄eg maximal du bloc restant est placée sur
    la diagonale ; parmi les candidates, celle qui laisse le plus petit
    d̄eg maximal dans le bloc suivant, puis la plus petite ligne, puis la
    plus petite colonne. Renvoie (ligne d'origine en position k, colonne
    d'origine en position k, degrés diagonaux).
    """
    if not A.is_square():
        raise DimensionMismatchError(f"dominant_permutation: matrice {A.shape} non carrée")
    n = A.nrows
    degrees = [[f.degbar for f in row] for row in A.entries]
    rows, cols = list(range(n)), list(range(n))
    row_perm, col_perm, diagonal = [], [], []

    for _ in range(n):
        top = max(degrees[r][c] for r in rows for c in cols)
        best = None
        for r in rows:
            for c in cols:
                if degrees[r][c] != top:
                    continue
                rest = max(
                    (degrees[rr][cc] for rr in rows if rr != r for cc in cols if cc != c),
                    default=-1,
                )
                key = (rest, r, c)
                if best is None or key < best:
                    best = key
        _, r, c = best
        row_perm.append(r)
        col_perm.append(c)
        diagonal.append(top)
        rows.remove(r)
        cols.remove(c)
    return tuple(row_perm), tuple(col_perm), tuple(diagonal)


# ──────────────────────────────────────────────────────────
# Linéarisations de colonnes et de lignes
# ──────────────────────────────────────────────────────────

def column_linearize(
    A: PolyMat, degrees: Sequence[int], chunk: Optional[int] = None
) -> Tuple[PolyMat, int, Tuple[int, ...]]:
    """Découpe les colonnes de degré de linéarisation > d.

    d vaut ⌈somme / n⌉ sauf si chunk est fourni. Renvoie (Â, d, nombres
    de morceaux). Les morceaux ajoutés et les lignes élémentaires (-x^d, 1)
    sont placés en fin de matrice, dans l'ordre (colonne d'origine, morceau).
    """
    m, n = A.shape
    if len(degrees) != n:
        raise DimensionMismatchError(f"degrés de linéarisation de longueur {len(degrees)}, {n} attendue")
    if chunk is None:
        total = sum(degrees)
        chunk = _ceil_div(total, n) if total > 0 else 0
    elif chunk < 0:
        raise PreconditionError(f"taille de morceau négative {chunk}")
    p = A.p
    counts = tuple(1 if chunk == 0 or d <= chunk else _ceil_div(d, chunk) for d in degrees)

    columns: List[List[Poly]] = []
    extra: List[List[Poly]] = []
    links: List[Tuple[int, int]] = []
    for j, a in enumerate(counts):
        col = A.column(j)
        if a == 1:
            columns.append(list(col))
            continue
        columns.append([f.chunk(0, chunk) for f in col])
        previous = j
        for k in range(1, a):
            last = k == a - 1
            extra.append([f.quo_x(k * chunk) if last else f.chunk(k, chunk) for f in col])
            index = n + len(extra) - 1
            links.append((previous, index))
            previous = index

    size = n + len(extra)
    zero = Poly.zero(p)
    grid = [list(row) for row in zip(*(columns + extra))] if m else []
    for previous, index in links:
        row = [zero] * size
        row[previous] = Poly.monomial(-1, chunk, p)
        row[index] = Poly.one(p)
        grid.append(row)
    return PolyMat.from_rows(grid, p, ncols=size), chunk, counts


def row_linearize(
    A: PolyMat, degrees: Sequence[int], chunk: Optional[int] = None
) -> Tuple[PolyMat, int, Tuple[int, ...]]:
    """Analogue transposé : lignes découpées, colonnes élémentaires (-x^d, 1)ᵀ en fin"""
    linearized, chunk, counts = column_linearize(A.transpose(), degrees, chunk)
    return linearized.transpose(), chunk, counts


# ──────────────────────────────────────────────────────────
# Lissage
# ──────────────────────────────────────────────────────────

def generic_det_bound(A: PolyMat) -> int:
    """degDet(A), maximum sur les permutations π de Σ d̄eg(a_{i,π(i)}).

    Calculé comme une affectation de poids maximal (l'oracle, lui, énumère
    les permutations).
    """
    if not A.is_square():
        raise DimensionMismatchError(f"generic_det_bound: matrice {A.shape} non carrée")
    if A.nrows == 0:
        return 0
    weights = np.array([[f.degbar for f in row] for row in A.entries], dtype=np.int64)
    rows, cols = linear_sum_assignment(weights, maximize=True)
    return int(weights[rows, cols].sum())


def smooth(A: PolyMat) -> Tuple[PolyMat, SmoothInfo]:
    """C de dimension m avec n ≤ m < 3n, deg(C) ≤ ⌈degDet/n⌉ et det(C) = det(A).

    Les colonnes sont découpées en morceaux de taille d = ⌈Σd_i/n⌉, d_i les
    degrés diagonaux dominants. Les lignes le sont ensuite en morceaux de
    taille max(d, min(⌈Σrdeg(Â)/m1⌉, ⌈degDet/n⌉)) : les lignes élémentaires,
    de degré d, restent entières et au plus n - 1 lignes sont ajoutées.
    """
    if not A.is_square():
        raise DimensionMismatchError(f"smooth: matrice {A.shape} non carrée")
    n = A.nrows
    row_perm, col_perm, diagonal = dominant_permutation(A)
    lin = [0] * n
    for k, c in enumerate(col_perm):
        lin[c] = diagonal[k]

    column_lin, column_chunk, _ = column_linearize(A, lin)
    bound = _ceil_div(generic_det_bound(A), n)
    row_degrees = [max((f.degbar for f in row), default=0) for row in column_lin.entries]
    average = _ceil_div(sum(row_degrees), column_lin.nrows)
    row_chunk = max(column_chunk, min(average, bound))
    C, _, _ = row_linearize(column_lin, row_degrees, row_chunk)

    m = C.nrows
    if m >= 3 * n or C.degree() > bound:
        raise StructuralError(f"smooth: m = {m}, deg(C) = {C.degree()} pour n = {n} et ⌈degDet/n⌉ = {bound}")
    logging.info(f"smooth: {n}x{n} de degré {A.degree()} -> {m}x{m} de degré {C.degree()}")
    info = SmoothInfo(
        original_dim=n,
        expanded_dim=m,
        row_perm=row_perm,
        col_perm=col_perm,
        diagonal_degrees=diagonal,
        linearization_degrees=tuple(lin),
        column_chunk=column_chunk,
        row_chunk=row_chunk,
        intermediate_dim=column_lin.nrows,
    )
    return C, info


def smooth_for_hermite(A: PolyMat) -> Tuple[PolyMat, SmoothInfo]:
    """B = C avec ses n premières lignes et colonnes renvoyées en fin.

    La forme de Hermite de B est [[I, 0], [*, H]] avec H celle de A.
    """
    C, info = smooth(A)
    n, m = info.original_dim, info.expanded_dim
    order = list(range(n, m)) + list(range(n))
    return C.submatrix(order, order), info

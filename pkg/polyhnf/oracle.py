"""
════════════════════════════════════════════════════════════
ORACLES - Références par force brute
════════════════════════════════════════════════════════════

Implémentations directes, sans rapport avec les algorithmes rapides, pour
les tests. Les tailles maximales sont lues dans la configuration à chaque
appel.
"""

import itertools
from functools import lru_cache
from typing import List

from polyhnf.algebra.polymat import PolyMat
from polyhnf.algebra.scalar import Poly, fe_inv
from polyhnf.config import get_settings
from polyhnf.errors import DimensionMismatchError, SingularMatrixError, SizeGuardError


def _guard(A: PolyMat, limit: int, name: str) -> None:
    if not A.is_square():
        raise DimensionMismatchError(f"{name}: matrice {A.shape} non carrée")
    if A.nrows > limit:
        raise SizeGuardError(f"{name}: dimension {A.nrows} > {limit}")


# ──────────────────────────────────────────────────────────
# Déterminant
# ──────────────────────────────────────────────────────────

def det_oracle(A: PolyMat) -> Poly:
    """Développement selon la première ligne, mémoïsé sur les colonnes restantes"""
    _guard(A, get_settings().ORACLE_DET_MAX_DIM, "det_oracle")
    n = A.nrows
    p = A.p

    @lru_cache(maxsize=None)
    def minor(row: int, mask: int) -> Poly:
        if row == n:
            return Poly.one(p)
        acc = Poly.zero(p)
        sign = 1
        for c in range(n):
            if not mask >> c & 1:
                continue
            entry = A[row, c]
            if entry:
                term = entry * minor(row + 1, mask & ~(1 << c))
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    return minor(0, (1 << n) - 1)


def degdet_oracle(A: PolyMat) -> int:
    """max sur les permutations π de somme d̄eg(a_{i,π(i)})"""
    _guard(A, get_settings().ORACLE_DEGDET_MAX_DIM, "degdet_oracle")
    degrees = [[f.degbar for f in row] for row in A.entries]
    n = A.nrows
    return max(sum(degrees[i][pi[i]] for i in range(n)) for pi in itertools.permutations(range(n)))


# ──────────────────────────────────────────────────────────
# Forme de Hermite
# ──────────────────────────────────────────────────────────

def hermite_oracle(A: PolyMat) -> PolyMat:
    """Élimination euclidienne sur les colonnes, puis normalisation"""
    _guard(A, get_settings().ORACLE_HNF_MAX_DIM, "hermite_oracle")
    n = A.nrows
    p = A.p
    cols: List[List[Poly]] = [list(c) for c in A.columns()]

    for i in range(n):
        while True:
            live = [j for j in range(i, n) if cols[j][i]]
            if not live:
                raise SingularMatrixError(f"hermite_oracle: matrice singulière (ligne {i})")
            pivot = min(live, key=lambda j: (cols[j][i].deg, j))
            cols[i], cols[pivot] = cols[pivot], cols[i]
            rest = [j for j in range(i + 1, n) if cols[j][i]]
            if not rest:
                break
            for j in rest:
                q = cols[j][i] // cols[i][i]
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]
        inv = fe_inv(cols[i][i].lc, p)
        cols[i] = [f.scale(inv) for f in cols[i]]

    # réduction des entrées hors diagonale, ligne par ligne
    for i in range(n):
        for j in range(i):
            q = cols[j][i] // cols[i][i]
            if q:
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]
    return PolyMat.from_columns(cols, p, nrows=n)


# ──────────────────────────────────────────────────────────
# Unimodularité, équivalence, noyau
# ──────────────────────────────────────────────────────────

def unimodular_check(W: PolyMat) -> bool:
    """det(W) constante non nulle"""
    d = det_oracle(W)
    return d.deg == 0


def equiv_check(A: PolyMat, B: PolyMat) -> bool:
    """A et B équivalentes à droite (mêmes formes de Hermite)"""
    if A.shape != B.shape or A.p != B.p:
        return False
    try:
        return hermite_oracle(A) == hermite_oracle(B)
    except SingularMatrixError:
        return False


def kernel_vector_oracle(F: PolyMat) -> PolyMat:
    """Générateur du noyau d'une matrice (n-1)×n de rang plein.

    Vecteur des mineurs maximaux signés, divisé par leur pgcd puis rendu
    unitaire sur sa première entrée non nulle.
    """
    m, n = F.shape
    if m != n - 1:
        raise DimensionMismatchError(f"kernel_vector_oracle: matrice {m}×{n}, (n-1)×n attendue")
    _guard(PolyMat.zeros(m, m, F.p), get_settings().ORACLE_DET_MAX_DIM, "kernel_vector_oracle")
    p = F.p
    minors = []
    for j in range(n):
        sub = F.submatrix(range(m), [c for c in range(n) if c != j])
        d = det_oracle(sub) if m else Poly.one(p)
        minors.append(d if j % 2 == 0 else -d)
    if all(f.is_zero() for f in minors):
        raise SingularMatrixError("kernel_vector_oracle: F n'est pas de rang plein")

    g = Poly.zero(p)
    for f in minors:
        g = _gcd(g, f)
    vector = [f // g for f in minors]
    lead = next(f for f in vector if f)
    scale = fe_inv(lead.lc, p)
    return PolyMat.from_columns([[f.scale(scale) for f in vector]], p, nrows=n)


def _gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic() if a else a

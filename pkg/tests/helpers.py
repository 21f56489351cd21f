"""Générateurs de matrices aléatoires et stratégies hypothesis partagés par les tests."""

import random
from typing import List

from hypothesis import strategies as st

from polyhnf.algebra.polymat import PolyMat
from polyhnf.algebra.scalar import Poly
from polyhnf.oracle import det_oracle

SWEEP_PRIMES = (2, 3, 7, 97)


def random_poly(rng: random.Random, p: int, deg: int) -> Poly:
    """Coefficients uniformes jusqu'au degré deg (le degré réel peut être plus petit)"""
    return Poly([rng.randrange(p) for _ in range(deg + 1)], p)


def random_matrix(rng: random.Random, m: int, n: int, deg: int, p: int) -> PolyMat:
    return PolyMat([[random_poly(rng, p, rng.randint(0, deg)) for _ in range(n)] for _ in range(m)], p)


def random_nonsingular(rng: random.Random, n: int, deg: int, p: int) -> PolyMat:
    while True:
        A = random_matrix(rng, n, n, deg, p)
        if det_oracle(A):
            return A


def random_full_row_rank(rng: random.Random, m: int, n: int, deg: int, p: int) -> PolyMat:
    """Matrice m×n (m ≤ n) dont le premier bloc m×m est non singulier"""
    while True:
        F = random_matrix(rng, m, n, deg, p)
        if m == 0 or det_oracle(F.submatrix(range(m), range(m))):
            return F


def random_unimodular(rng: random.Random, n: int, p: int, steps: int = 6, deg: int = 2) -> PolyMat:
    """Produit d'opérations élémentaires sur les colonnes de l'identité"""
    cols: List[List[Poly]] = [list(c) for c in PolyMat.identity(n, p).columns()]
    for _ in range(steps):
        if n > 1:
            i, j = rng.sample(range(n), 2)
            factor = random_poly(rng, p, deg)
            cols[j] = [a + factor * b for a, b in zip(cols[j], cols[i])]
        k = rng.randrange(n)
        c = rng.randrange(1, p)
        cols[k] = [f.scale(c) for f in cols[k]]
    return PolyMat.from_columns(cols, p, nrows=n)


def bidiagonal_unimodular(n: int, d: int, p: int) -> PolyMat:
    """1 sur la diagonale, -x^d sous la diagonale"""
    rows = [[Poly.zero(p)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Poly.one(p)
        if i > 0:
            rows[i][i - 1] = Poly.monomial(-1, d, p)
    return PolyMat(rows, p)


def degree_profile_matrix(rng: random.Random, degrees: List[List[int]], p: int) -> PolyMat:
    """Entrées de degré exactement imposé, coefficients aléatoires"""
    rows = []
    for line in degrees:
        row = []
        for d in line:
            coeffs = [rng.randrange(p) for _ in range(d)] + [rng.randrange(1, p)]
            row.append(Poly(coeffs, p))
        rows.append(row)
    return PolyMat(rows, p)


def skewed_degree_profile(rng: random.Random, n: int) -> List[List[int]]:
    """Degrés très déséquilibrés : poids de ligne + poids de colonne - bruit"""
    weights = (0, 1, 3, 12, 30)
    rows = [rng.choice(weights) for _ in range(n)]
    cols = [rng.choice(weights) for _ in range(n)]
    return [[max(0, r + c - rng.randint(0, 10)) for c in cols] for r in rows]


# ──────────────────────────────────────────────────────────
# Stratégies
# ──────────────────────────────────────────────────────────

@st.composite
def nonsingular_matrices(draw, max_dim: int = 4, max_deg: int = 3, primes=SWEEP_PRIMES):
    p = draw(st.sampled_from(primes))
    n = draw(st.integers(1, max_dim))
    deg = draw(st.integers(0, max_deg))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_nonsingular(random.Random(seed), n, deg, p)


@st.composite
def polys(draw, p: int = 7, max_deg: int = 8):
    coeffs = draw(st.lists(st.integers(0, p - 1), max_size=max_deg + 1))
    return Poly(coeffs, p)

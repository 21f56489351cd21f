"""
════════════════════════════════════════════════════════════
MATRICES - Matrices polynomiales et matrices constantes sur GF(p)
════════════════════════════════════════════════════════════

PolyMat : grille m×n de Poly partageant un même module, avec les
degrés (décalés) par ligne / colonne et la matrice dominante.
ConstMat : matrice de GF(p) sur un tableau numpy int64 ; p < 2^31
garantit qu'un produit de deux résidus tient sur 62 bits.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from polyhnf.algebra.scalar import (
    MINUS_INFINITY,
    Degree,
    FieldElement,
    Poly,
    Prime,
    fe_inv,
    poly_dot,
)
from polyhnf.errors import (
    DimensionMismatchError,
    ModulusError,
    RankDeficiencyError,
    SingularMatrixError,
    StructuralError,
)


Shift = Tuple[int, ...]


def shift_sum(s: Sequence[int]) -> int:
    """ξ = somme des composantes du shift"""
    return sum(s)


# ──────────────────────────────────────────────────────────
# Matrices constantes
# ──────────────────────────────────────────────────────────

def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # b découpé en deux mots de 16 bits : chaque somme de produits reste < 2^63
    lo = b & 0xFFFF
    hi = b >> 16
    res_lo = (a @ lo) % p
    res_hi = (a @ hi) % p
    return (res_lo + (res_hi * 65536) % p) % p


class ConstMat:
    """Matrice m×n à coefficients dans GF(p), immuable"""

    __slots__ = ("data", "p")

    def __init__(self, rows: Sequence[Sequence[int]], p: int, shape: Optional[Tuple[int, int]] = None):
        p = Prime(p)
        if shape is None:
            data = np.array(rows, dtype=np.int64)
            if data.ndim != 2:
                raise DimensionMismatchError("ConstMat attend une liste de lignes")
        else:
            data = np.array(rows, dtype=np.int64).reshape(shape)
        data = data % p
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("ConstMat est immuable")

    @classmethod
    def from_array(cls, data: np.ndarray, p: int) -> "ConstMat":
        return cls(data, p, shape=data.shape)

    @classmethod
    def identity(cls, n: int, p: int) -> "ConstMat":
        return cls.from_array(np.eye(n, dtype=np.int64), p)

    @classmethod
    def zeros(cls, m: int, n: int, p: int) -> "ConstMat":
        return cls.from_array(np.zeros((m, n), dtype=np.int64), p)

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.data.shape

    def __getitem__(self, key) -> FieldElement:
        return int(self.data[key])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConstMat):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((int(self.p), self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"ConstMat({self.tolist()}, p={int(self.p)})"

    def __matmul__(self, other: "ConstMat") -> "ConstMat":
        return cm_mul(self, other)

    def tolist(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.data]

    def transpose(self) -> "ConstMat":
        return ConstMat.from_array(self.data.T.copy(), self.p)

    def columns(self, indices: Sequence[int]) -> "ConstMat":
        return ConstMat.from_array(self.data[:, list(indices)].reshape(self.nrows, len(indices)), self.p)

    def hstack(self, other: "ConstMat") -> "ConstMat":
        if self.nrows != other.nrows:
            raise DimensionMismatchError("hstack: nombres de lignes différents")
        return ConstMat.from_array(np.hstack([self.data, other.data]), self.p)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and bool(np.array_equal(self.data, np.eye(self.nrows, dtype=np.int64)))

    def to_polymat(self) -> "PolyMat":
        p = self.p
        return PolyMat._wrap(
            tuple(tuple(Poly.constant(int(v), p) for v in row) for row in self.data),
            self.nrows, self.ncols, p,
        )


def cm_mul(a: ConstMat, b: ConstMat) -> ConstMat:
    """Produit de matrices constantes"""
    if a.p != b.p:
        raise ModulusError("cm_mul: modules différents")
    if a.ncols != b.nrows:
        raise DimensionMismatchError(f"cm_mul: {a.shape} × {b.shape}")
    return ConstMat.from_array(_matmul_mod(a.data, b.data, a.p), a.p)


def _row_reduce(data: np.ndarray, p: int, full: bool) -> Tuple[np.ndarray, List[int], int]:
    """Élimination de Gauss, pivot = première ligne non nulle de la colonne.

    Renvoie (matrice réduite, colonnes pivots, produit des pivots signé).
    full=True : forme échelonnée réduite (Gauss-Jordan).
    """
    work = data.copy()
    m, n = work.shape
    pivots: List[int] = []
    det = 1
    row = 0
    for col in range(n):
        if row >= m:
            break
        nonzero = np.nonzero(work[row:, col])[0]
        if nonzero.size == 0:
            continue
        r = row + int(nonzero[0])
        if r != row:
            work[[row, r]] = work[[r, row]]
            det = -det
        pivot = int(work[row, col])
        det = det * pivot % p
        inv = fe_inv(pivot, p)
        work[row] = (work[row] * inv) % p
        targets = np.arange(m) != row if full else np.arange(m) > row
        factors = work[targets, col].copy()
        work[targets] = (work[targets] - factors[:, None] * work[row]) % p
        pivots.append(col)
        row += 1
    return work, pivots, det % p


def cm_det(M: ConstMat) -> FieldElement:
    """Déterminant par élimination de Gauss"""
    if M.nrows != M.ncols:
        raise DimensionMismatchError(f"cm_det: matrice {M.shape} non carrée")
    if M.nrows == 0:
        return 1
    _, pivots, det = _row_reduce(M.data, M.p, full=False)
    return det if len(pivots) == M.nrows else 0


def cm_rank(M: ConstMat) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return len(_row_reduce(M.data, M.p, full=False)[1])


def cm_inv(M: ConstMat) -> ConstMat:
    """Inverse par Gauss-Jordan sur [M | I]"""
    n = M.nrows
    if n != M.ncols:
        raise DimensionMismatchError(f"cm_inv: matrice {M.shape} non carrée")
    augmented = np.hstack([M.data, np.eye(n, dtype=np.int64)])
    reduced, pivots, _ = _row_reduce(augmented, M.p, full=True)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("cm_inv: matrice constante singulière")
    return ConstMat.from_array(reduced[:, n:].copy(), M.p)


def cm_completion(Ur: ConstMat, Vu: ConstMat) -> ConstMat:
    """Complétion Uℓ* (n×m) de Ur telle que [Uℓ* Ur] soit inversible.

    Uℓ* est formée des m premières colonnes de la transformation T qui
    amène Vu à sa forme échelonnée réduite en colonnes [I_m 0], de sorte
    que Vu·Uℓ* = I_m.
    """
    n, k = Ur.shape
    m = Vu.nrows
    if Vu.ncols != n or k + m != n:
        raise DimensionMismatchError(f"cm_completion: Ur {Ur.shape}, Vu {Vu.shape}")
    p = Vu.p
    # Opérations sur les colonnes de Vu = opérations sur les lignes de Vu^T
    augmented = np.hstack([Vu.data.T, np.eye(n, dtype=np.int64)])
    reduced, pivots, _ = _row_reduce(augmented, p, full=True)
    if pivots[:m] != list(range(m)):
        raise RankDeficiencyError("cm_completion: Vu n'est pas de rang plein")
    transform = reduced[:, m:].T
    completion = ConstMat.from_array(transform[:, :m].copy(), p)
    if cm_det(completion.hstack(Ur)) == 0:
        raise StructuralError("cm_completion: rang(Ur) insuffisant, [Uℓ* Ur] singulière")
    return completion


# ──────────────────────────────────────────────────────────
# Matrices polynomiales
# ──────────────────────────────────────────────────────────

class PolyMat:
    """Matrice m×n de polynômes sur GF(p), immuable"""

    __slots__ = ("entries", "nrows", "ncols", "p")

    def __init__(self, entries: Sequence[Sequence[Poly]], p: int, ncols: Optional[int] = None):
        p = Prime(p)
        rows = tuple(tuple(row) for row in entries)
        width = len(rows[0]) if rows else (ncols or 0)
        if ncols is not None and width != ncols:
            raise DimensionMismatchError(f"PolyMat: {width} colonnes, {ncols} attendues")
        for row in rows:
            if len(row) != width:
                raise DimensionMismatchError("PolyMat: lignes de longueurs différentes")
            for f in row:
                if not isinstance(f, Poly) or f.p != p:
                    raise ModulusError(f"PolyMat: entrée {f!r} hors de GF({int(p)})[x]")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", width)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMat est immuable")

    @classmethod
    def _wrap(cls, entries: Tuple[Tuple[Poly, ...], ...], nrows: int, ncols: int, p: int) -> "PolyMat":
        mat = object.__new__(cls)
        object.__setattr__(mat, "entries", entries)
        object.__setattr__(mat, "nrows", nrows)
        object.__setattr__(mat, "ncols", ncols)
        object.__setattr__(mat, "p", p)
        return mat

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Poly]], p: int, ncols: Optional[int] = None) -> "PolyMat":
        """Construction interne sans revalidation des entrées"""
        p = Prime(p)
        entries = tuple(tuple(row) for row in rows)
        width = len(entries[0]) if entries else (ncols or 0)
        return cls._wrap(entries, len(entries), width, p)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Poly]], p: int, nrows: Optional[int] = None) -> "PolyMat":
        p = Prime(p)
        height = len(columns[0]) if columns else (nrows or 0)
        entries = tuple(tuple(col[i] for col in columns) for i in range(height))
        return cls._wrap(entries, height, len(columns), p)

    @classmethod
    def zeros(cls, m: int, n: int, p: int) -> "PolyMat":
        zero = Poly.zero(p)
        return cls.from_rows([[zero] * n for _ in range(m)], p, ncols=n)

    @classmethod
    def identity(cls, n: int, p: int) -> "PolyMat":
        zero, one = Poly.zero(p), Poly.one(p)
        return cls.from_rows([[one if i == j else zero for j in range(n)] for i in range(n)], p, ncols=n)

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], p: int) -> "PolyMat":
        """Entrées données en écriture usuelle ("2x^3 + x + 1")"""
        return cls([[Poly.from_string(s, p) for s in row] for row in rows], p)

    # Accès
    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key: Tuple[int, int]) -> Poly:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Poly, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[Poly, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> List[Tuple[Poly, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "PolyMat":
        rows, cols = list(rows), list(cols)
        return PolyMat.from_rows([[self.entries[i][j] for j in cols] for i in rows], self.p, ncols=len(cols))

    def top(self, k: int) -> "PolyMat":
        return self.submatrix(range(k), range(self.ncols))

    def bottom(self, k: int) -> "PolyMat":
        """Les lignes à partir de l'indice k"""
        return self.submatrix(range(k, self.nrows), range(self.ncols))

    def transpose(self) -> "PolyMat":
        return PolyMat.from_columns(self.entries, self.p, nrows=self.ncols)

    def hstack(self, other: "PolyMat") -> "PolyMat":
        if self.nrows != other.nrows:
            raise DimensionMismatchError("hstack: nombres de lignes différents")
        return PolyMat.from_rows([a + b for a, b in zip(self.entries, other.entries)], self.p,
                                 ncols=self.ncols + other.ncols)

    def vstack(self, other: "PolyMat") -> "PolyMat":
        if self.ncols != other.ncols:
            raise DimensionMismatchError("vstack: nombres de colonnes différents")
        return PolyMat.from_rows(self.entries + other.entries, self.p, ncols=self.ncols)

    # Comparaison / affichage
    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMat):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((int(self.p), self.shape, self.entries))

    def __repr__(self) -> str:
        return f"PolyMat({self.nrows}x{self.ncols}, p={int(self.p)})"

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(f) for f in row) + "]" for row in self.entries)

    # Arithmétique
    def __add__(self, other: "PolyMat") -> "PolyMat":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"addition {self.shape} + {other.shape}")
        return PolyMat.from_rows([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                                 self.p, ncols=self.ncols)

    def __sub__(self, other: "PolyMat") -> "PolyMat":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"soustraction {self.shape} - {other.shape}")
        return PolyMat.from_rows([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                                 self.p, ncols=self.ncols)

    def __mul__(self, other):
        if isinstance(other, PolyMat):
            return pm_mul(self, other)
        if isinstance(other, ConstMat):
            return pm_mul_const(self, other)
        if isinstance(other, (int, Poly)):
            return PolyMat.from_rows([[f * other for f in row] for row in self.entries], self.p, ncols=self.ncols)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Poly)):
            return self * other
        return NotImplemented

    # Degrés
    def degree(self) -> Degree:
        """Degré maximal des entrées (MINUS_INFINITY pour la matrice nulle)"""
        return max((f.deg for row in self.entries for f in row), default=MINUS_INFINITY)

    def is_zero(self) -> bool:
        return all(f.is_zero() for row in self.entries for f in row)

    def is_constant(self) -> bool:
        return all(f.degbar == 0 for row in self.entries for f in row)

    def cdeg(self) -> Tuple[Degree, ...]:
        return pm_cdeg(self)

    def rdeg(self) -> Tuple[Degree, ...]:
        return pm_rdeg(self)


# ──────────────────────────────────────────────────────────
# Opérations nommées
# ──────────────────────────────────────────────────────────

def _same_modulus(A, B, op: str) -> None:
    if A.p != B.p:
        raise ModulusError(f"{op}: modules {int(A.p)} et {int(B.p)}")


def pm_mul(A: PolyMat, B: PolyMat) -> PolyMat:
    """Produit exact A·B"""
    _same_modulus(A, B, "pm_mul")
    if A.ncols != B.nrows:
        raise DimensionMismatchError(f"pm_mul: {A.shape} × {B.shape}")
    p = A.p
    cols = B.columns()
    entries = tuple(tuple(poly_dot(row, col, p) for col in cols) for row in A.entries)
    return PolyMat._wrap(entries, A.nrows, B.ncols, p)


def pm_mul_const(A: PolyMat, M: ConstMat) -> PolyMat:
    """Produit A·M avec M constante"""
    _same_modulus(A, M, "pm_mul_const")
    if A.ncols != M.nrows:
        raise DimensionMismatchError(f"pm_mul_const: {A.shape} × {M.shape}")
    p = A.p
    width = max((len(f.coeffs) for row in A.entries for f in row), default=0)
    # Coefficients de A en tableau (m, n, D) puis un produit constant par degré
    coeffs = np.zeros((A.nrows, A.ncols, max(width, 1)), dtype=np.int64)
    for i, row in enumerate(A.entries):
        for j, f in enumerate(row):
            coeffs[i, j, :len(f.coeffs)] = f.coeffs
    out = np.stack([_matmul_mod(coeffs[:, :, k], M.data, p) for k in range(coeffs.shape[2])], axis=2)
    entries = tuple(
        tuple(Poly(out[i, j].tolist(), p) for j in range(M.ncols))
        for i in range(A.nrows)
    )
    return PolyMat._wrap(entries, A.nrows, M.ncols, p)


def pm_cdeg(A: PolyMat) -> Tuple[Degree, ...]:
    """Degrés des colonnes (MINUS_INFINITY pour une colonne nulle)"""
    return tuple(max((f.deg for f in col), default=MINUS_INFINITY) for col in A.columns())


def pm_rdeg(A: PolyMat) -> Tuple[Degree, ...]:
    return tuple(max((f.deg for f in row), default=MINUS_INFINITY) for row in A.entries)


def _check_shift(s: Sequence[int], length: int, what: str) -> None:
    if len(s) != length:
        raise DimensionMismatchError(f"shift de longueur {len(s)}, {length} attendue ({what})")


def pm_cdeg_shifted(A: PolyMat, s: Sequence[int]) -> Tuple[Degree, ...]:
    """cdeg_s(A)_j = max_i (deg A_ij + s_i)"""
    _check_shift(s, A.nrows, "lignes")
    return tuple(
        max((f.deg + si for f, si in zip(col, s)), default=MINUS_INFINITY)
        for col in A.columns()
    )


def pm_rdeg_shifted(A: PolyMat, s: Sequence[int]) -> Tuple[Degree, ...]:
    """rdeg_s(A)_i = max_j (deg A_ij + s_j)"""
    _check_shift(s, A.ncols, "colonnes")
    return tuple(
        max((f.deg + sj for f, sj in zip(row, s)), default=MINUS_INFINITY)
        for row in A.entries
    )


def pm_leading_matrix(A: PolyMat, s: Optional[Sequence[int]] = None) -> ConstMat:
    """lm_s(A) : coefficient de x^(d_j - s_i) dans A_ij, d = cdeg_s(A).

    Une colonne nulle donne une colonne nulle.
    """
    if s is None:
        s = (0,) * A.nrows
    degrees = pm_cdeg_shifted(A, s)
    data = np.zeros((A.nrows, A.ncols), dtype=np.int64)
    for j, d in enumerate(degrees):
        if d == MINUS_INFINITY:
            continue
        for i in range(A.nrows):
            data[i, j] = A.entries[i][j].coeff(d - s[i])
    return ConstMat.from_array(data, A.p)


def pm_constant(A: PolyMat) -> ConstMat:
    """Évaluation en x = 0"""
    data = np.array([[f.constant_term for f in row] for row in A.entries], dtype=np.int64)
    return ConstMat.from_array(data.reshape(A.nrows, A.ncols), A.p)


def pm_evaluate(A: PolyMat, alpha: int) -> ConstMat:
    """Évaluation en x = alpha"""
    data = np.array([[f.evaluate(alpha) for f in row] for row in A.entries], dtype=np.int64)
    return ConstMat.from_array(data.reshape(A.nrows, A.ncols), A.p)

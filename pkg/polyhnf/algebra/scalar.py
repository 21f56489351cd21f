"""
════════════════════════════════════════════════════════════
SCALAIRES - Corps premier GF(p) et polynômes denses GF(p)[x]
════════════════════════════════════════════════════════════

Un polynôme est la liste de ses coefficients par degré croissant,
[a_0, a_1, ..., a_d], chaque a_i dans {0, ..., p-1} et a_d non nul.
La liste vide représente le polynôme nul.
"""

import re
from typing import Iterable, List, Sequence, Tuple, Union

from polyhnf.config import settings
from polyhnf.errors import FieldDivisionError, ModulusError, ParseError, StructuralError


# Borne sur le module : les produits de deux résidus tiennent sur 62 bits
MAX_MODULUS = 2 ** 31

# deg(0) ; d̄eg(0) vaut 0 et n'utilise jamais cette sentinelle
MINUS_INFINITY = float("-inf")

Degree = Union[int, float]

# Résidu canonique dans [0, p)
FieldElement = int


# ──────────────────────────────────────────────────────────
# Corps premier
# ──────────────────────────────────────────────────────────

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)


def is_prime(n: int) -> bool:
    """Test de primalité déterministe (Miller-Rabin, bases 2, 7, 61 : exact sous 4.7e9)"""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 7, 61):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Prime(int):
    """Module premier p, 2 ≤ p < 2^31, vérifié à la construction"""

    def __new__(cls, value: int):
        if isinstance(value, Prime):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise ModulusError(f"module entier attendu, reçu {value!r}")
        if not 2 <= value < MAX_MODULUS:
            raise ModulusError(f"module {value} hors de l'intervalle [2, 2^31)")
        if not is_prime(value):
            raise ModulusError(f"le module {value} n'est pas premier")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"


def fe_inv(a: FieldElement, p: int) -> FieldElement:
    """Inverse de a modulo p"""
    a %= p
    if a == 0:
        raise FieldDivisionError(f"0 n'est pas inversible modulo {p}")
    return pow(a, -1, p)


# ──────────────────────────────────────────────────────────
# Noyaux sur listes de coefficients
# ──────────────────────────────────────────────────────────

def _strip(coeffs: List[int]) -> List[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _mul_school(a: Sequence[int], b: Sequence[int]) -> List[int]:
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
    return res


def _add_raw(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, bi in enumerate(b):
        res[i] += bi
    return res


def _mul_raw(a: Sequence[int], b: Sequence[int], threshold: int) -> List[int]:
    """Produit sans réduction modulaire (Karatsuba au-delà du seuil)"""
    if not a or not b:
        return []
    if min(len(a), len(b)) < threshold:
        return _mul_school(a, b)
    h = max(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    if not a1 or not b1:
        # Opérandes déséquilibrés : une seule moitié non vide
        if not a1:
            lo, hi = _mul_raw(a, b0, threshold), _mul_raw(a, b1, threshold)
        else:
            lo, hi = _mul_raw(a0, b, threshold), _mul_raw(a1, b, threshold)
        res = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(lo):
            res[i] += c
        for i, c in enumerate(hi):
            res[i + h] += c
        return res
    z0 = _mul_raw(a0, b0, threshold)
    z2 = _mul_raw(a1, b1, threshold)
    z1 = _mul_raw(_add_raw(a0, a1), _add_raw(b0, b1), threshold)
    res = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        res[i] += c
        z1[i] -= c
    for i, c in enumerate(z2):
        res[i + 2 * h] += c
        z1[i] -= c
    for i, c in enumerate(z1):
        if c:
            res[i + h] += c
    return res


def mul_coeffs(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Produit réduit modulo p, sans zéros de tête"""
    raw = _mul_raw(a, b, max(2, settings.KARATSUBA_THRESHOLD))
    return _strip([c % p for c in raw])


def divrem_coeffs(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[List[int], List[int]]:
    """Division euclidienne sur listes canoniques (b non vide)"""
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    inv = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db):
                r[k + j] = (r[k + j] - c * b[j]) % p
        r[k + db] = 0
    return q, _strip(r)


# ──────────────────────────────────────────────────────────
# Polynômes
# ──────────────────────────────────────────────────────────

_TERM_RE = re.compile(r"^(\d+)?\*?(x(?:\^(\d+))?)?$")


class Poly:
    """Polynôme dense de GF(p)[x], immuable.

    Invariant : le dernier coefficient de `coeffs` est non nul (si non vide).
    """

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs: Iterable[int], p: int):
        p = Prime(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(_strip([int(c) % p for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("Poly est immuable")

    @classmethod
    def _make(cls, coeffs: Sequence[int], p: int) -> "Poly":
        # coeffs déjà réduits et sans zéro de tête
        poly = object.__new__(cls)
        object.__setattr__(poly, "p", p)
        object.__setattr__(poly, "coeffs", tuple(coeffs))
        return poly

    # Constructeurs
    @classmethod
    def zero(cls, p: int) -> "Poly":
        return cls._make((), Prime(p))

    @classmethod
    def one(cls, p: int) -> "Poly":
        return cls._make((1,), Prime(p))

    @classmethod
    def constant(cls, c: int, p: int) -> "Poly":
        p = Prime(p)
        c %= p
        return cls._make((c,) if c else (), p)

    @classmethod
    def monomial(cls, c: int, k: int, p: int) -> "Poly":
        """c·x^k"""
        p = Prime(p)
        c %= p
        return cls._make((0,) * k + (c,) if c else (), p)

    @classmethod
    def from_string(cls, text: str, p: int) -> "Poly":
        """Lire une écriture usuelle : "3x^3 + x^2 - 2", "-x+2", "0"."""
        p = Prime(p)
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ParseError(f"polynôme vide: {text!r}")
        acc: dict = {}
        pos = 0
        for match in re.finditer(r"([+-]?)([^+-]+)", s):
            if match.start() != pos:
                raise ParseError(f"polynôme mal formé: {text!r}")
            pos = match.end()
            sign, body = match.group(1), match.group(2)
            term = _TERM_RE.match(body)
            if term is None or (term.group(1) is None and term.group(2) is None):
                raise ParseError(f"terme invalide {body!r} dans {text!r}")
            coeff = int(term.group(1)) if term.group(1) is not None else 1
            if term.group(2) is None:
                exp = 0
            else:
                exp = int(term.group(3)) if term.group(3) is not None else 1
            acc[exp] = acc.get(exp, 0) + (-coeff if sign == "-" else coeff)
        if pos != len(s):
            raise ParseError(f"polynôme mal formé: {text!r}")
        coeffs = [0] * (max(acc) + 1)
        for exp, c in acc.items():
            coeffs[exp] = c
        return cls(coeffs, p)

    # Requêtes
    @property
    def deg(self) -> Degree:
        """Degré ; MINUS_INFINITY pour le polynôme nul"""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def degbar(self) -> int:
        """d̄eg : comme deg mais vaut 0 sur le polynôme nul"""
        return max(len(self.coeffs) - 1, 0)

    @property
    def lc(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def constant_term(self) -> FieldElement:
        return self.coeff(0)

    def evaluate(self, a: int) -> FieldElement:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Poly.constant(other, self.p)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((int(self.p), self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)}, p={int(self.p)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    # Arithmétique
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.p != self.p:
                raise ModulusError(f"modules différents: {int(self.p)} et {int(other.p)}")
            return other
        if isinstance(other, int):
            return Poly.constant(other, self.p)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, bi in enumerate(b):
            res[i] = (res[i] + bi) % p
        return Poly._make(_strip(res), p)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        p = self.p
        return Poly._make([(p - c) % p for c in self.coeffs], p)

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.sub_scaled_shift(other, 1, 0)

    def __rsub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._make(mul_coeffs(self.coeffs, other.coeffs, self.p), self.p)

    __rmul__ = __mul__

    def __divmod__(self, other) -> Tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            raise FieldDivisionError("division par le polynôme nul")
        q, r = divrem_coeffs(self.coeffs, other.coeffs, self.p)
        return Poly._make(q, self.p), Poly._make(r, self.p)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def scale(self, c: int) -> "Poly":
        p = self.p
        c %= p
        if not c:
            return Poly._make((), p)
        return Poly._make([a * c % p for a in self.coeffs], p)

    def shift(self, k: int) -> "Poly":
        """Multiplication par x^k"""
        if not self.coeffs or k == 0:
            return self
        return Poly._make((0,) * k + self.coeffs, self.p)

    def truncate(self, k: int) -> "Poly":
        """Reste modulo x^k"""
        return Poly._make(_strip(list(self.coeffs[:max(k, 0)])), self.p)

    def quo_x(self, k: int) -> "Poly":
        """Quotient par x^k (partie haute)"""
        return Poly._make(self.coeffs[k:], self.p)

    def chunk(self, k: int, size: int) -> "Poly":
        """k-ième chiffre dans l'écriture en base x^size"""
        return Poly._make(_strip(list(self.coeffs[k * size:(k + 1) * size])), self.p)

    def sub_scaled_shift(self, other: "Poly", c: int, k: int) -> "Poly":
        """self - c·x^k·other, en une passe"""
        p = self.p
        c %= p
        if not c or not other.coeffs:
            return self
        length = max(len(self.coeffs), len(other.coeffs) + k)
        res = list(self.coeffs) + [0] * (length - len(self.coeffs))
        for i, b in enumerate(other.coeffs):
            if b:
                res[i + k] = (res[i + k] - c * b) % p
        return Poly._make(_strip(res), p)

    def monic(self) -> "Poly":
        return poly_monic(self)[0]


# ──────────────────────────────────────────────────────────
# Opérations nommées
# ──────────────────────────────────────────────────────────

def poly_mul(a: Poly, b: Poly) -> Poly:
    """Produit exact dans GF(p)[x]"""
    return a * b


def poly_divrem(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """(q, r) avec a = q·b + r et deg r < deg b"""
    return divmod(a, b)


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Quotient exact ; un reste non nul est une erreur de structure"""
    q, r = divmod(a, b)
    if r:
        raise StructuralError(f"division non exacte: reste {r}")
    return q


def poly_monic(a: Poly) -> Tuple[Poly, FieldElement]:
    """(m, λ) avec a = λ·m et m unitaire"""
    if a.is_zero():
        raise FieldDivisionError("le polynôme nul n'a pas de forme unitaire")
    lam = a.lc
    return a.scale(fe_inv(lam, a.p)), lam


def poly_dot(left: Sequence[Poly], right: Sequence[Poly], p: int) -> Poly:
    """Σ left_k · right_k, réduit une seule fois"""
    threshold = max(2, settings.KARATSUBA_THRESHOLD)
    acc: List[int] = []
    for a, b in zip(left, right):
        if a.coeffs and b.coeffs:
            prod = _mul_raw(a.coeffs, b.coeffs, threshold)
            if len(prod) > len(acc):
                acc.extend([0] * (len(prod) - len(acc)))
            for i, c in enumerate(prod):
                acc[i] += c
    return Poly._make(_strip([c % p for c in acc]), p)


def poly_product(polys: Iterable[Poly], p: int) -> Poly:
    """Produit d'une famille (1 si vide)"""
    acc = Poly.one(p)
    for f in polys:
        acc = acc * f
    return acc

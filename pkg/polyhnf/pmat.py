"""
════════════════════════════════════════════════════════════
FORMAT PMAT - Lecture / écriture des fichiers matrices
════════════════════════════════════════════════════════════

    <p> <m> <n>
    une ligne par entrée, ligne par ligne : coefficients croissants
    séparés par des espaces, "0" pour le polynôme nul

Les lignes vides et celles commençant par '#' sont ignorées. La sortie
est canonique et se termine par un saut de ligne.
"""

from typing import Iterator, List, Optional, Tuple

from pydantic import ValidationError

from polyhnf.algebra.polymat import PolyMat
from polyhnf.algebra.scalar import Poly, is_prime
from polyhnf.errors import ParseError
from polyhnf.schemas.matrix_file import MatrixFile


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def _integers(line: str, number: int) -> List[int]:
    tokens = line.split()
    for token in tokens:
        if not (token.isascii() and token.isdigit()):
            raise ParseError(f"entier décimal attendu, lu {token!r}", line=number)
    return [int(t) for t in tokens]


def parse_poly_line(line: str, p: int, number: Optional[int] = None) -> List[int]:
    """Coefficients d'une ligne d'entrée, vérifiés dans [0, p) et canoniques"""
    coeffs = _integers(line, number)
    if not coeffs:
        raise ParseError("entrée vide", line=number)
    if coeffs == [0]:
        return []
    if any(c >= p for c in coeffs):
        raise ParseError(f"coefficient hors de [0, {p})", line=number)
    if coeffs[-1] == 0:
        raise ParseError("coefficient dominant nul (écriture non canonique)", line=number)
    return coeffs


def read_matrix_file(text: str) -> MatrixFile:
    """Lire et valider le contenu d'un fichier .pmat"""
    lines = _content_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise ParseError("fichier vide : en-tête '<p> <m> <n>' attendu")
    values = _integers(header, number)
    if len(values) != 3:
        raise ParseError("en-tête '<p> <m> <n>' attendu", line=number)
    p, m, n = values
    if p >= 2 ** 31 or not is_prime(p):
        raise ParseError(f"le module {p} n'est pas un premier < 2^31", line=number)
    if m < 1 or n < 1:
        raise ParseError(f"dimensions {m}×{n} invalides", line=number)

    entries: List[List[int]] = []
    last = number
    for number, line in lines:
        if len(entries) == m * n:
            raise ParseError(f"entrée en trop, {m * n} attendues", line=number)
        entries.append(parse_poly_line(line, p, number))
        last = number
    if len(entries) != m * n:
        raise ParseError(f"{len(entries)} entrées lues, {m * n} attendues", line=last)

    try:
        return MatrixFile(p=p, rows=m, cols=n, entries=entries)
    except ValidationError as exc:
        raise ParseError(f"fichier invalide : {exc.errors()[0]['msg']}")


def parse_pmat(text: str) -> PolyMat:
    """Matrice polynomiale décrite par un texte .pmat"""
    data = read_matrix_file(text)
    n = data.cols
    rows = [
        [Poly(data.entries[i * n + j], data.p) for j in range(n)]
        for i in range(data.rows)
    ]
    return PolyMat(rows, data.p)


def format_poly(f: Poly) -> str:
    """Ligne d'entrée : coefficients croissants, "0" pour le polynôme nul"""
    if f.is_zero():
        return "0"
    return " ".join(str(c) for c in f.coeffs)


def format_pmat(A: PolyMat) -> str:
    """Écriture canonique de A"""
    lines = [f"{int(A.p)} {A.nrows} {A.ncols}"]
    for row in A.entries:
        lines.extend(format_poly(f) for f in row)
    return "\n".join(lines) + "\n"

"""
════════════════════════════════════════════════════════════
CLI - Ligne de commande polyhnf
════════════════════════════════════════════════════════════

Usage:
    polyhnf hnf FILE [--check] [--oracle] [-o OUT]
    polyhnf det FILE [--check] [--oracle] [-o OUT]
    polyhnf diag FILE [--check] [--oracle] [-o OUT]
    polyhnf reduce --shift=S FILE [--check] [-o OUT]
    polyhnf kernel --shift=S FILE [--check] [--oracle] [-o OUT]
    polyhnf smooth FILE [--check] [-o OUT]
    polyhnf degdet FILE [-o OUT]

S est une liste d'entiers séparés par des virgules ; un shift négatif
s'écrit --shift=-1,2. FILE vaut "-" pour l'entrée standard.

Codes de sortie : 0 succès, 1 vérification échouée, 2 matrice singulière,
3 erreur de lecture (fichier, arguments, matrice non carrée ou shift de
mauvaise longueur), 4 oracle hors limite.
"""

import argparse
import logging
import sys
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from polyhnf.algebra.polymat import (
    PolyMat,
    cm_det,
    cm_rank,
    pm_cdeg_shifted,
    pm_leading_matrix,
    pm_mul,
)
from polyhnf.algebra.scalar import poly_monic, poly_product
from polyhnf.algorithms.bases import kernel_basis
from polyhnf.algorithms.det import determinant
from polyhnf.algorithms.hnf import hermite, hermite_diagonal, is_hermite
from polyhnf.algorithms.linearize import generic_det_bound, smooth
from polyhnf.algorithms.reduce import column_reduce
from polyhnf.config import settings
from polyhnf.errors import CheckFailedError, ParseError, PolyMatError, SizeGuardError
from polyhnf.oracle import degdet_oracle, det_oracle, equiv_check, hermite_oracle, kernel_vector_oracle
from polyhnf.pmat import format_pmat, format_poly, parse_pmat


class Command(str, Enum):
    hnf = "hnf"
    det = "det"
    diag = "diag"
    reduce = "reduce"
    kernel = "kernel"
    smooth = "smooth"
    degdet = "degdet"


# ──────────────────────────────────────────────────────────
# Analyse des arguments
# ──────────────────────────────────────────────────────────

class _ArgumentParser(argparse.ArgumentParser):
    """Les erreurs d'usage deviennent des ParseError (code 3)"""

    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def parse_shift(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"shift invalide {text!r} : entiers séparés par des virgules attendus")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="polyhnf", description="Formes de Hermite et déterminants sur GF(p)[x]")
    parser.add_argument("--version", action="version", version=f"{settings.APP_NAME} {settings.APP_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    helps = {
        Command.hnf: "forme de Hermite (colonnes)",
        Command.det: "déterminant",
        Command.diag: "entrées diagonales de la forme de Hermite (matrice 1×n)",
        Command.reduce: "forme s-réduite en colonnes",
        Command.kernel: "base de noyau s-minimale",
        Command.smooth: "matrice lissée C (même déterminant)",
        Command.degdet: "borne générique du déterminant (oracle)",
    }
    for command, text in helps.items():
        cmd = sub.add_parser(command.value, help=text)
        cmd.add_argument("file", metavar="FILE", help="fichier .pmat, '-' pour l'entrée standard")
        cmd.add_argument("-o", "--output", metavar="OUT", default=None, help="fichier de sortie (défaut : stdout)")
        if command in (Command.reduce, Command.kernel):
            cmd.add_argument("--shift", type=parse_shift, required=True, metavar="S", help="shift, ex. --shift=5,5,4")
        if command != Command.degdet:
            cmd.add_argument("--check", action="store_true", default=settings.CHECK_BY_DEFAULT,
                             help="vérifier le résultat")
        if command in (Command.hnf, Command.det, Command.diag, Command.kernel):
            cmd.add_argument("--oracle", action="store_true", help="calcul par force brute (taille limitée)")
    return parser


# ──────────────────────────────────────────────────────────
# Vérifications
# ──────────────────────────────────────────────────────────

def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailedError(f"vérification échouée : {message}")


def _check_hermite(A: PolyMat, H: PolyMat) -> None:
    _require(is_hermite(H), "le résultat n'est pas en forme de Hermite")
    diagonal = poly_product((H[i, i] for i in range(H.nrows)), A.p)
    _require(diagonal == poly_monic(determinant(A))[0], "produit diagonal ≠ det(A) unitaire")
    try:
        _require(equiv_check(A, H), "H n'est pas équivalente à A")
    except SizeGuardError:
        logging.info("check: équivalence non vérifiée (dimension au-delà de l'oracle)")


def _check_det(A: PolyMat, d) -> None:
    diagonal = poly_product(hermite_diagonal(A), A.p)
    _require(poly_monic(d)[0] == diagonal, "det unitaire ≠ produit des entrées diagonales")
    try:
        _require(d == det_oracle(A), "désaccord avec l'oracle")
    except SizeGuardError:
        logging.info("check: déterminant non comparé à l'oracle (dimension au-delà de la limite)")


# ──────────────────────────────────────────────────────────
# Commandes
# ──────────────────────────────────────────────────────────

def _run_hnf(A: PolyMat, args) -> str:
    H = hermite_oracle(A) if args.oracle else hermite(A)
    if args.check:
        _check_hermite(A, H)
    return format_pmat(H)


def _run_det(A: PolyMat, args) -> str:
    d = det_oracle(A) if args.oracle else determinant(A)
    if args.check:
        _check_det(A, d)
    return format_poly(d) + "\n"


def _run_diag(A: PolyMat, args) -> str:
    if args.oracle:
        H = hermite_oracle(A)
        diagonal = tuple(H[i, i] for i in range(H.nrows))
    else:
        diagonal = hermite_diagonal(A)
    if args.check:
        _require(poly_product(diagonal, A.p) == poly_monic(determinant(A))[0],
                 "produit diagonal ≠ det(A) unitaire")
    return format_pmat(PolyMat([list(diagonal)], A.p))


def _run_reduce(A: PolyMat, args) -> str:
    R = column_reduce(A, args.shift)
    if args.check:
        _require(cm_det(pm_leading_matrix(R, args.shift)) != 0, "matrice dominante décalée singulière")
        _require(poly_monic(determinant(R))[0] == poly_monic(determinant(A))[0], "det(R) ≠ det(A) à une unité près")
    return format_pmat(R)


def _run_kernel(A: PolyMat, args) -> str:
    N = kernel_vector_oracle(A) if args.oracle else kernel_basis(A, args.shift)
    if args.check:
        _require(pm_mul(A, N).is_zero(), "F·N ≠ 0")
        _require(cm_rank(pm_leading_matrix(N, args.shift)) == N.ncols, "N n'est pas s-réduite")
        logging.info(f"check: cdeg_s(N) = {pm_cdeg_shifted(N, args.shift)}")
    return format_pmat(N)


def _run_smooth(A: PolyMat, args) -> str:
    C, info = smooth(A)
    if args.check:
        _require(info.expanded_dim < 3 * info.original_dim, "dimension m ≥ 3n")
        bound = -(-generic_det_bound(A) // info.original_dim)
        _require(C.degree() <= bound, f"deg(C) > ⌈degDet/n⌉ = {bound}")
        _require(determinant(C) == determinant(A), "det(C) ≠ det(A)")
    return format_pmat(C)


def _run_degdet(A: PolyMat, args) -> str:
    return f"{degdet_oracle(A)}\n"


SQUARE_COMMANDS = (Command.hnf, Command.det, Command.diag, Command.smooth, Command.degdet)


def _check_input_shape(command: Command, A: PolyMat, args) -> None:
    """Formes d'entrée refusées avant calcul (code 3)"""
    if command in SQUARE_COMMANDS and not A.is_square():
        raise ParseError(f"{command.value}: matrice {A.nrows}x{A.ncols} non carrée")
    shift = getattr(args, "shift", None)
    if shift is not None and len(shift) != A.ncols:
        raise ParseError(f"{command.value}: shift de longueur {len(shift)}, {A.ncols} attendue")


RUNNERS: Dict[Command, Callable[[PolyMat, argparse.Namespace], str]] = {
    Command.hnf: _run_hnf,
    Command.det: _run_det,
    Command.diag: _run_diag,
    Command.reduce: _run_reduce,
    Command.kernel: _run_kernel,
    Command.smooth: _run_smooth,
    Command.degdet: _run_degdet,
}


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"lecture de {path} impossible : {exc.strerror}")


def main(argv: Optional[List[str]] = None) -> int:
    """Point d'entrée ; renvoie le code de sortie"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # --help / --version
        return exc.code or 0
    except PolyMatError as exc:
        print(exc.detail, file=sys.stderr)
        return exc.exit_code

    command = Command(args.command)
    try:
        A = parse_pmat(_read_input(args.file))
        _check_input_shape(command, A, args)
        logging.info(f"{command.value}: matrice {A.nrows}x{A.ncols} sur GF({int(A.p)})")
        output = RUNNERS[command](A, args)
    except PolyMatError as exc:
        logging.debug(f"{command.value}: {type(exc).__name__}, code {exc.exit_code}")
        print(exc.detail, file=sys.stderr)
        return exc.exit_code

    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return 0

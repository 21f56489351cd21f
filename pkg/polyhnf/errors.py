"""
════════════════════════════════════════════════════════════
ERREURS - Hiérarchie d'exceptions et codes de sortie
════════════════════════════════════════════════════════════

Chaque exception porte un `detail` lisible et le `exit_code` que la CLI
renvoie, sur le modèle (status_code, detail) des exceptions HTTP.
"""

from typing import Optional


class PolyMatError(Exception):
    """Erreur de base du paquet"""

    exit_code: int = 1

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


# ──────────────────────────────────────────────────────────
# Arithmétique
# ──────────────────────────────────────────────────────────

class ModulusError(PolyMatError, ValueError):
    """Module non premier, hors bornes, ou deux modules différents"""


class FieldDivisionError(PolyMatError, ZeroDivisionError):
    """Inversion de zéro ou division par le polynôme nul"""


class DimensionMismatchError(PolyMatError, ValueError):
    """Dimensions incompatibles (produit, shift, blocs)"""


# ──────────────────────────────────────────────────────────
# Algorithmes
# ──────────────────────────────────────────────────────────

class SingularMatrixError(PolyMatError):
    """Matrice singulière détectée en cours de calcul"""

    exit_code = 2


class RankDeficiencyError(SingularMatrixError):
    """Rang insuffisant (noyau de mauvaise dimension, constantes de rang faible)"""


class NotInColumnModuleError(PolyMatError):
    """Colonnes hors du module engendré (division adjugée non exacte)"""


class StructuralError(PolyMatError):
    """Contrat interne violé : signale un bug en amont"""


class PreconditionError(PolyMatError):
    """Précondition d'un algorithme non satisfaite (ex. degrés diagonaux faux)"""


class SizeGuardError(PolyMatError):
    """Oracle appelé sur une matrice trop grande"""

    exit_code = 4


# ──────────────────────────────────────────────────────────
# Entrées / sorties
# ──────────────────────────────────────────────────────────

class ParseError(PolyMatError):
    """Fichier matrice ou ligne de commande mal formés"""

    exit_code = 3

    def __init__(self, detail: str, line: Optional[int] = None):
        if line is not None:
            detail = f"ligne {line}: {detail}"
        super().__init__(detail)
        self.line = line


class CheckFailedError(PolyMatError):
    """Vérification --check échouée"""

    exit_code = 1

"""
════════════════════════════════════════════════════════════
SCHEMAS - Linéarisations partielles
════════════════════════════════════════════════════════════
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from polyhnf.algebra.polymat import PolyMat


# ──────────────────────────────────────────────────────────
# Linéarisation des lignes (forme de Hermite, degrés connus)
# ──────────────────────────────────────────────────────────

class LinearizationInfo(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    delta_bar: int = Field(..., ge=1, description="1 + floor(somme(delta) / n)")
    alpha: Tuple[int, ...] = Field(..., description="Nombre de lignes issues de chaque ligne")
    beta: Tuple[int, ...] = Field(..., description="Degré résiduel de chaque ligne découpée")
    shift: Tuple[int, ...] = Field(..., description="s_d, degrés attendus des lignes linéarisées")
    expansion: PolyMat = Field(..., description="Matrice d'expansion-compression E (n×ñ)")
    colmap: Tuple[int, ...] = Field(..., description="Colonnes (0-indexées) portant les colonnes d'origine")

    @property
    def dim(self) -> int:
        """ñ = somme des alpha"""
        return sum(self.alpha)

    @model_validator(mode="after")
    def check_consistency(self) -> "LinearizationInfo":
        if len(self.alpha) != len(self.beta) or len(self.colmap) != len(self.alpha):
            raise ValueError("alpha, beta et colmap doivent avoir la même longueur")
        if len(self.shift) != self.dim:
            raise ValueError("s_d doit être de longueur somme(alpha)")
        if self.shift and max(self.shift) > self.delta_bar:
            raise ValueError("max(s_d) dépasse delta_bar")
        return self


# ──────────────────────────────────────────────────────────
# Lissage des degrés (déterminant, Hermite)
# ──────────────────────────────────────────────────────────

class SmoothInfo(BaseModel):
    model_config = ConfigDict(frozen=True)

    original_dim: int = Field(..., ge=1, description="n, dimension de A")
    expanded_dim: int = Field(..., ge=1, description="m, dimension de C (n ≤ m)")
    row_perm: Tuple[int, ...] = Field(..., description="Ligne d'origine placée en position k")
    col_perm: Tuple[int, ...] = Field(..., description="Colonne d'origine placée en position k")
    diagonal_degrees: Tuple[int, ...] = Field(..., description="Degrés diagonaux dominants, décroissants")
    linearization_degrees: Tuple[int, ...] = Field(..., description="Degrés de linéarisation par colonne de A")
    column_chunk: int = Field(..., ge=0, description="Taille des morceaux de colonnes (0 : aucun découpage)")
    row_chunk: int = Field(..., ge=0, description="Taille des morceaux de lignes (0 : aucun découpage)")
    intermediate_dim: int = Field(..., ge=1, description="Dimension après linéarisation des colonnes")

    @model_validator(mode="after")
    def check_dims(self) -> "SmoothInfo":
        if not self.original_dim <= self.intermediate_dim <= self.expanded_dim:
            raise ValueError("dimensions incohérentes (n ≤ m1 ≤ m attendu)")
        return self

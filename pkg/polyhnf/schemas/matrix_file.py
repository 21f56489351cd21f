"""
════════════════════════════════════════════════════════════
SCHEMAS - Fichier matrice (.pmat)
════════════════════════════════════════════════════════════
"""

from typing import List

from pydantic import BaseModel, Field, field_validator, model_validator

from polyhnf.algebra.scalar import is_prime


class MatrixFile(BaseModel):
    """Contenu validé d'un fichier .pmat : en-tête puis m·n entrées"""

    p: int = Field(..., ge=2, lt=2 ** 31, description="Module premier")
    rows: int = Field(..., ge=1, description="Nombre de lignes m")
    cols: int = Field(..., ge=1, description="Nombre de colonnes n")
    entries: List[List[int]] = Field(..., description="Coefficients croissants, ligne par ligne ([] = 0)")

    @field_validator("p")
    @classmethod
    def check_prime(cls, v: int) -> int:
        if not is_prime(v):
            raise ValueError(f"le module {v} n'est pas premier")
        return v

    @model_validator(mode="after")
    def check_entries(self) -> "MatrixFile":
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{len(self.entries)} entrées, {self.rows * self.cols} attendues")
        for k, coeffs in enumerate(self.entries):
            if any(not 0 <= c < self.p for c in coeffs):
                raise ValueError(f"entrée {k + 1}: coefficient hors de [0, {self.p})")
            if coeffs and coeffs[-1] == 0:
                raise ValueError(f"entrée {k + 1}: coefficient dominant nul")
        return self

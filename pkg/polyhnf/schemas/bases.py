"""
════════════════════════════════════════════════════════════
SCHEMAS - Base de colonnes étendue
════════════════════════════════════════════════════════════
"""

from pydantic import BaseModel, ConfigDict, Field

from polyhnf.algebra.polymat import PolyMat


class ColumnBasisExt(BaseModel):
    """Triplet (B1, Ur, Vu) avec Au·Ur = 0 et B1·Vu = Au"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    column_basis: PolyMat = Field(..., description="B1, base de colonnes m×m, réduite en colonnes")
    kernel_basis: PolyMat = Field(..., description="Ur, base de noyau n×(n-m), s-minimale")
    right_factor: PolyMat = Field(..., description="Vu, facteur droit m×n")

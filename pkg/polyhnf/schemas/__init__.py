"""
Schemas Pydantic des structures échangées entre modules
"""

from polyhnf.schemas.bases import ColumnBasisExt
from polyhnf.schemas.linearization import LinearizationInfo, SmoothInfo
from polyhnf.schemas.matrix_file import MatrixFile

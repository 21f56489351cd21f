"""
PolyHNF - Formes de Hermite et déterminants exacts sur GF(p)[x]
"""

from polyhnf.config import APP_NAME, APP_VERSION

__version__ = APP_VERSION

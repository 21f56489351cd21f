from pathlib import Path

import pytest

from polyhnf.algebra.polymat import PolyMat
from polyhnf.config import get_settings

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def app_settings(monkeypatch):
    """Settings partagés, modifiables par test via monkeypatch"""
    current = get_settings()

    def override(**values):
        for key, value in values.items():
            monkeypatch.setattr(current, key, value)
        return current

    return override


# ──────────────────────────────────────────────────────────
# Matrices de référence sur Z7
# ──────────────────────────────────────────────────────────

@pytest.fixture
def z7_top_rows() -> PolyMat:
    """Bloc 2×3 du haut de la matrice 3×3 de référence"""
    return PolyMat.from_strings([
        ["6x+1", "2x^3+x^2+6x+1", "3"],
        ["4x^5+5x^4+4x^2+x", "6x^5+5x^4+2x^3+4", "x^4+5x^3+6x^2+5x"],
    ], 7)


@pytest.fixture
def z7_matrix_3x3(z7_top_rows) -> PolyMat:
    bottom = PolyMat.from_strings([["2", "2x^5+5x^4+5x^3+6x^2", "6"]], 7)
    return z7_top_rows.vstack(bottom)


@pytest.fixture
def z7_hermite_form() -> PolyMat:
    return PolyMat.from_strings([
        ["1", "0", "0"],
        ["1", "x+6", "0"],
        [
            "4x^8+2x^7+5x^6+4x^4+3x^3+4x^2+5",
            "3x^8+2x^7+3x^6+3x^5+4x^3+5x^2+6x+4",
            "x^9+2x^8+x^7+4x^6+6x^5+4x^4+3x^3+3x^2+4x",
        ],
    ], 7)


@pytest.fixture
def z7_matrix_5x5() -> PolyMat:
    return PolyMat.from_strings([
        ["-x+2", "-2x-3", "3x^3+x^2", "-x+2", "-3x^5-x^4"],
        ["-x", "-2", "3x^3", "-x", "-3x^5"],
        ["-2", "x+3", "2", "-2", "-2x^2"],
        ["0", "1", "-3x^2-2", "-2x^2-1", "x^4+x^2"],
        ["0", "2", "3", "-3x^2", "-2x^4-3x^2+3"],
    ], 7)

"""
════════════════════════════════════════════════════════════
POLYHNF - Formes de Hermite et déterminants sur GF(p)[x]
════════════════════════════════════════════════════════════

Démarrage:
    python main.py hnf tests/fixtures/z7_hermite_3x3.pmat
    python main.py det --check tests/fixtures/z7_det_5x5.pmat

Configuration:
    voir docs/configuration.md (fichier .env à la racine)
"""

import logging
import sys

from polyhnf.cli import main
from polyhnf.config import settings


# ──────────────────────────────────────────────────────────
# Logging
# ──────────────────────────────────────────────────────────

logging.basicConfig(
    level=settings.EFFECTIVE_LOG_LEVEL,
    format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    stream=sys.stderr,
)


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

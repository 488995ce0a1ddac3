# ============================================================
# conftest.py
# Raíz del repositorio en sys.path y fixtures compartidas
# ============================================================

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from thrackles.models.graph import Edge, EmbeddedBipartite  # noqa: E402


@pytest.fixture
def k23() -> EmbeddedBipartite:
    return EmbeddedBipartite.of(2, 3)


@pytest.fixture
def edge():
    """Atajo E(i, j) para construir aristas en los tests."""
    return Edge.of

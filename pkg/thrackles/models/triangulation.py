# ============================================================
# thrackles/models/triangulation.py
# La triangulación Δ_≻ y su vista como conos tangentes
# ============================================================

from typing import Tuple

from pydantic import Field, model_validator

from thrackles.models.base import FrozenModel
from thrackles.models.polytope import LatticePoint, Simplex
from thrackles.models.thrackle import SpanningThrackle


class Triangulation(FrozenModel):
    """
    Δ_≻ de conv(B_{r,n}): un símplice por cada thrackle generador de K_{r,n−r}.

    `simplices[i]` proviene de `thrackles[i]`.
    """

    r: int = Field(..., ge=1)
    n: int = Field(..., ge=2)
    simplices: Tuple[Simplex, ...]
    thrackles: Tuple[SpanningThrackle, ...]

    @model_validator(mode="after")
    def _aligned(self) -> "Triangulation":
        if len(self.simplices) != len(self.thrackles):
            raise ValueError("Cada símplice debe tener su thrackle de origen")
        return self

    @property
    def count(self) -> int:
        return len(self.simplices)


class ConeDescription(FrozenModel):
    """Cono simplicial con ápice e_B y generadores tomados de E_{r,n}."""

    apex: LatticePoint
    generators: Tuple[LatticePoint, ...]


__all__ = ["Triangulation", "ConeDescription"]

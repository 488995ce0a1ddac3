# ============================================================
# thrackles/models/matroid.py
# Matroides dadas por lista explícita de bases
# ============================================================

from typing import Dict, Tuple

from pydantic import Field, field_validator, model_validator

from thrackles.models.base import FrozenModel
from thrackles.models.graph import Edge


Basis = Tuple[int, ...]


class MatroidBases(FrozenModel):
    """
    Matroide de rango r sobre [n] = {1..n} dada por sus bases.

    El modelo valida solo la estructura (no vacía, cardinalidad r, rango
    de elementos). El axioma de intercambio lo verifica
    matroid_service.validate_bases; make_matroid rechaza las entradas que
    no lo cumplen.
    """

    n: int = Field(..., gt=0)
    r: int = Field(..., gt=0)
    bases: Tuple[Basis, ...]

    @field_validator("bases", mode="after")
    @classmethod
    def _normalize(cls, value: Tuple[Basis, ...]) -> Tuple[Basis, ...]:
        # Bases como tuplas ordenadas, sin duplicados, en orden lexicográfico
        return tuple(sorted({tuple(sorted(b)) for b in value}))

    @model_validator(mode="after")
    def _check_structure(self) -> "MatroidBases":
        if self.r > self.n:
            raise ValueError(f"Rango r={self.r} mayor que n={self.n}")
        if not self.bases:
            raise ValueError("Una matroide necesita al menos una base")
        for b in self.bases:
            if len(set(b)) != self.r:
                raise ValueError(f"Base {list(b)} no tiene cardinalidad {self.r}")
            if b[0] < 1 or b[-1] > self.n:
                raise ValueError(f"Base {list(b)} fuera de [1, {self.n}]")
        return self

    def has_basis(self, b) -> bool:
        return tuple(sorted(b)) in set(self.bases)


class TangentSubgraph(FrozenModel):
    """
    Subgrafo de K_{r,n−r} de intercambios válidos en la base B.

    `left_labels` / `right_labels` registran el reetiquetado que respeta el
    orden: elemento original → vértice de K_{r,n−r}.
    """

    base: Basis
    r: int
    n: int
    edges: Tuple[Edge, ...]
    left_labels: Dict[int, int]
    right_labels: Dict[int, int]

    @property
    def is_complete(self) -> bool:
        return len(self.edges) == self.r * (self.n - self.r)


class TangentConeReport(FrozenModel):
    """Conteo de thrackles maximales en el cono tangente de una base."""

    base: Basis
    relabeling: Dict[int, int]
    edges: Tuple[Tuple[int, int], ...]
    count: int
    sizes: Tuple[int, ...]
    equal_cardinality: bool
    uniform_bound: int
    within_bound: bool
    note: str = ""


__all__ = ["Basis", "MatroidBases", "TangentSubgraph", "TangentConeReport"]

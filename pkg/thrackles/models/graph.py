# ============================================================
# thrackles/models/graph.py
# Aristas y el encaje convexo fijo de K_{s,t}
# ============================================================

from typing import Tuple

from pydantic import Field, model_validator

from thrackles.models.base import FrozenModel


class Edge(FrozenModel):
    """
    Arista (left, right) de K_{s,t}, con 1 ≤ left ≤ s < right ≤ s+t.

    El rango exacto depende del grafo; aquí solo se valida 1 ≤ left < right.
    El orden total es lexicográfico en (left, right).
    """

    left: int = Field(..., ge=1, description="Vértice izquierdo en [1, s]")
    right: int = Field(..., ge=2, description="Vértice derecho en [s+1, s+t]")

    @model_validator(mode="after")
    def _check_sides(self) -> "Edge":
        if self.left >= self.right:
            raise ValueError(f"Arista inválida ({self.left},{self.right}): left debe ser < right")
        return self

    @classmethod
    def of(cls, left: int, right: int) -> "Edge":
        return cls(left=left, right=right)

    @property
    def key(self) -> Tuple[int, int]:
        return self.left, self.right

    def __lt__(self, other: "Edge") -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"Edge({self.left},{self.right})"


class EmbeddedBipartite(FrozenModel):
    """
    K_{s,t} dibujado como en la figura de referencia: los s vértices
    izquierdos en columna etiquetados de abajo hacia arriba, los t derechos
    etiquetados de arriba hacia abajo.
    """

    s: int = Field(..., gt=0, description="Tamaño de la parte izquierda")
    t: int = Field(..., gt=0, description="Tamaño de la parte derecha")

    @classmethod
    def of(cls, s: int, t: int) -> "EmbeddedBipartite":
        return cls(s=s, t=t)

    @classmethod
    def for_matroid(cls, r: int, n: int) -> "EmbeddedBipartite":
        """El grafo K_{r,n−r} asociado a U^{r,n}."""
        return cls(s=r, t=n - r)

    @property
    def n(self) -> int:
        return self.s + self.t

    @property
    def edge_count(self) -> int:
        return self.s * self.t

    def is_left(self, v: int) -> bool:
        return 1 <= v <= self.s

    def is_right(self, v: int) -> bool:
        return self.s < v <= self.n

    def contains(self, e: Edge) -> bool:
        return self.is_left(e.left) and self.is_right(e.right)


__all__ = ["Edge", "EmbeddedBipartite"]

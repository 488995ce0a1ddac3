# ============================================================
# thrackles/models/thrackle.py
# Thrackles, su representación por intervalos y las cadenas de bits
# ============================================================

from typing import Dict, FrozenSet, List, Tuple

from pydantic import Field, model_validator

from thrackles.models.base import FrozenModel
from thrackles.models.graph import Edge, EmbeddedBipartite


class Thrackle(FrozenModel):
    """
    Conjunto de aristas de K_{s,t} que se cortan dos a dos.

    El modelo solo guarda datos; la verificación del invariante vive en
    thrackle_service (is_thrackle / make_spanning_thrackle).
    """

    graph: EmbeddedBipartite
    edges: FrozenSet[Edge]

    @property
    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def neighbors(self) -> Dict[int, List[int]]:
        """Vecinos ordenados de cada vértice tocado por el thrackle."""
        adj: Dict[int, List[int]] = {}
        for e in self.edges:
            adj.setdefault(e.left, []).append(e.right)
            adj.setdefault(e.right, []).append(e.left)
        return {v: sorted(ws) for v, ws in adj.items()}


class SpanningThrackle(Thrackle):
    """Thrackle que además es árbol generador (s+t−1 aristas, todos los vértices)."""


class IntervalRep(FrozenModel):
    """
    Codificación canónica de un thrackle generador.

    Con i_0 := s+1 e i_s := s+t, el vértice izquierdo k es adyacente
    exactamente a los vértices derechos [i_{k−1}, i_k].
    """

    s: int = Field(..., gt=0)
    t: int = Field(..., gt=0)
    breakpoints: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_breakpoints(self) -> "IntervalRep":
        if len(self.breakpoints) != self.s - 1:
            raise ValueError(
                f"Se esperaban {self.s - 1} puntos de corte, llegaron {len(self.breakpoints)}"
            )
        lo, hi = self.s + 1, self.s + self.t
        previous = lo
        for b in self.breakpoints:
            if b < previous or b > hi:
                raise ValueError(f"Puntos de corte inválidos {self.breakpoints} para K_{{{self.s},{self.t}}}")
            previous = b
        return self

    @property
    def bounds(self) -> Tuple[int, ...]:
        """(i_0, i_1, …, i_s)."""
        return (self.s + 1, *self.breakpoints, self.s + self.t)

    def interval(self, k: int) -> Tuple[int, int]:
        b = self.bounds
        return b[k - 1], b[k]


class BitString(FrozenModel):
    """Cadena {0,1} producida por Φ."""

    bits: str = Field(..., pattern=r"^[01]*$")

    @property
    def zeros(self) -> int:
        return self.bits.count("0")

    @property
    def ones(self) -> int:
        return self.bits.count("1")

    def __str__(self) -> str:
        return self.bits


__all__ = ["Thrackle", "SpanningThrackle", "IntervalRep", "BitString"]

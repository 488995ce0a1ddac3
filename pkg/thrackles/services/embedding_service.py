# ============================================================
# thrackles/services/embedding_service.py
# Geometría del encaje convexo de K_{s,t} en aritmética entera pura
# ============================================================

import logging
from typing import Iterable, List, Optional

from thrackles.models.graph import Edge, EmbeddedBipartite

logger = logging.getLogger(__name__)


# ============================================================
# V1 PRINCIPIOS DEL ENCAJE
# ============================================================
# 1. Izquierda: vértices 1..s de abajo hacia arriba (x=0, altura i)
# 2. Derecha: vértices s+1..s+t de arriba hacia abajo (x=1)
# 3. Alrededor del (s+t)-gono las etiquetas quedan en orden natural
# 4. Dos aristas disjuntas se cruzan ⇔ (i−k)(j−l) > 0
# ============================================================


# ============================================================
# ARISTAS
# ============================================================

def all_edges(g: EmbeddedBipartite) -> List[Edge]:
    """
    Las s·t aristas de K_{s,t} en orden lexicográfico (left, right).

    Example:
        all_edges(K_{2,3}) → [(1,3),(1,4),(1,5),(2,3),(2,4),(2,5)]
    """
    return [Edge(left=i, right=j) for i in range(1, g.s + 1) for j in range(g.s + 1, g.n + 1)]


def _share_vertex(e1: Edge, e2: Edge) -> bool:
    return e1.left == e2.left or e1.right == e2.right


# ============================================================
# CRUCE / ENCUENTRO
# ============================================================

def crosses(e1: Edge, e2: Edge) -> bool:
    """
    True si los segmentos cerrados de dos aristas disjuntas se cruzan.

    Raises:
        ValueError: Si comparten vértice (usar meets)
    """
    if _share_vertex(e1, e2):
        raise ValueError(f"{e1!r} y {e2!r} comparten vértice: usar meets()")
    return (e1.left - e2.left) * (e1.right - e2.right) > 0


def meets(e1: Edge, e2: Edge) -> bool:
    """Comparten vértice o se cruzan. meets(e, e) es True."""
    return _share_vertex(e1, e2) or (e1.left - e2.left) * (e1.right - e2.right) > 0


def weight(e: Edge, g: EmbeddedBipartite) -> int:
    """Número de aristas de K_{s,t} que no encuentran a `e`."""
    if not g.contains(e):
        raise ValueError(f"{e!r} no pertenece a K_{{{g.s},{g.t}}}")
    return sum(1 for f in all_edges(g) if not meets(e, f))


# ============================================================
# EL (s+t)-GONO
# ============================================================

def circular_distance(e: Edge, g: EmbeddedBipartite) -> int:
    """Distancia entre los extremos de `e` sobre el (s+t)-gono."""
    d = abs(e.right - e.left)
    return min(d, g.n - d)


def chords_interleave(e1: Edge, e2: Edge) -> bool:
    """
    Oráculo independiente de crosses: las cuerdas se cortan en el interior
    del polígono convexo ⇔ sus extremos se alternan en el orden cíclico.
    """
    a, b = e1.left, e1.right
    c, d = e2.left, e2.right
    if len({a, b, c, d}) < 4:
        raise ValueError(f"{e1!r} y {e2!r} comparten vértice")
    return (a < c < b) != (a < d < b)


# ============================================================
# DOT
# ============================================================

def vertex_position(v: int, g: EmbeddedBipartite) -> tuple:
    """Coordenadas (x, y) del vértice v en el dibujo de referencia."""
    if g.is_left(v):
        return 0, v
    if g.is_right(v):
        return 1, g.t + 1 - (v - g.s)
    raise ValueError(f"Vértice {v} fuera de K_{{{g.s},{g.t}}}")


def to_dot(g: EmbeddedBipartite, highlight: Optional[Iterable[Edge]] = None, name: str = "K") -> str:
    """
    Emite K_{s,t} en DOT con posiciones fijas (`neato -n`).

    Las aristas de `highlight` se dibujan sólidas; el resto, punteadas.
    Sin `highlight` se dibuja el grafo completo en sólido.
    """
    marked = set(highlight) if highlight is not None else None
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(1, g.n + 1):
        x, y = vertex_position(v, g)
        lines.append(f'  {v} [pos="{x},{y}!"];')
    for e in all_edges(g):
        style = "solid" if marked is None or e in marked else "dashed"
        lines.append(f"  {e.left} -- {e.right} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ============================================================
# EXPORTACIONES PÚBLICAS
# ============================================================

__all__ = [
    "all_edges",
    "crosses",
    "meets",
    "weight",
    "circular_distance",
    "chords_interleave",
    "vertex_position",
    "to_dot",
]

# ============================================================
# thrackles/services/thrackle_service.py
# Thrackles generadores de K_{s,t}: enumeración, conteo y biyección Φ
# ============================================================

import logging
import threading
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Set, Tuple

import networkx as nx
from sympy import Matrix

from thrackles.models.graph import Edge, EmbeddedBipartite
from thrackles.models.thrackle import BitString, IntervalRep, SpanningThrackle, Thrackle
from thrackles.services.embedding_service import all_edges, meets
from thrackles.utils import guard_size

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_EDGES = 30
MAXIMAL_THRACKLE_MAX_EDGES = 24


def _check_sizes(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ValueError(f"K_{{{s},{t}}} inválido: se requiere s ≥ 1 y t ≥ 1")


def _check_membership(g: EmbeddedBipartite, edges: Iterable[Edge]) -> List[Edge]:
    edges = list(edges)
    for e in edges:
        if not g.contains(e):
            raise ValueError(f"{e!r} no pertenece a K_{{{g.s},{g.t}}}")
    return edges


# ============================================================
# PREDICADOS
# ============================================================

def is_thrackle(g: EmbeddedBipartite, edges: Iterable[Edge]) -> bool:
    """Todas las parejas de aristas se encuentran (vacío o una arista: True)."""
    edges = _check_membership(g, edges)
    return all(meets(a, b) for a, b in combinations(edges, 2))


def is_acyclic(edges: Iterable[Edge]) -> bool:
    graph = nx.Graph()
    graph.add_edges_from(e.key for e in edges)
    return graph.number_of_nodes() == 0 or nx.is_forest(graph)


def is_spanning_thrackle(g: EmbeddedBipartite, edges: Iterable[Edge]) -> bool:
    """Thrackle con s+t−1 aristas que toca todos los vértices (luego es árbol)."""
    edges = set(_check_membership(g, edges))
    if len(edges) != g.n - 1:
        return False
    covered = {e.left for e in edges} | {e.right for e in edges}
    if len(covered) != g.n:
        return False
    return is_thrackle(g, edges)


def make_spanning_thrackle(g: EmbeddedBipartite, edges: Iterable[Edge]) -> SpanningThrackle:
    """
    Construye un SpanningThrackle validado.

    Raises:
        ValueError: Si las aristas no forman un thrackle generador
    """
    edges = frozenset(edges)
    if not is_spanning_thrackle(g, edges):
        raise ValueError(f"No es thrackle generador de K_{{{g.s},{g.t}}}: {sorted(edges)}")
    return SpanningThrackle(graph=g, edges=edges)


def _as_spanning(h: Thrackle) -> SpanningThrackle:
    # Siempre revalida: un SpanningThrackle se puede construir a mano
    return make_spanning_thrackle(h.graph, h.edges)


# ============================================================
# REPRESENTACIÓN POR INTERVALOS
# ============================================================

def interval_to_thrackle(rep: IntervalRep) -> SpanningThrackle:
    """El vértice izquierdo k recibe los derechos [i_{k−1}, i_k]."""
    g = EmbeddedBipartite(s=rep.s, t=rep.t)
    edges = set()
    for k in range(1, rep.s + 1):
        lo, hi = rep.interval(k)
        edges.update(Edge(left=k, right=j) for j in range(lo, hi + 1))
    return SpanningThrackle(graph=g, edges=frozenset(edges))


def thrackle_to_interval(h: Thrackle) -> IntervalRep:
    """
    Lee i_k como el menor vecino derecho del vértice k+1.

    Raises:
        ValueError: Si h no es thrackle generador
    """
    h = _as_spanning(h)
    g = h.graph
    adj = h.neighbors()
    breakpoints = tuple(adj[k + 1][0] for k in range(1, g.s))
    rep = IntervalRep(s=g.s, t=g.t, breakpoints=breakpoints)
    if interval_to_thrackle(rep).edges != h.edges:
        raise ValueError(f"Vecindades no contiguas en {h.sorted_edges}")
    return rep


def to_weak_composition(rep: IntervalRep) -> Tuple[int, ...]:
    """Partes c_k = i_k − i_{k−1}: composición débil de t−1 en s partes."""
    b = rep.bounds
    return tuple(b[k] - b[k - 1] for k in range(1, rep.s + 1))


def from_weak_composition(parts: Iterable[int], s: int, t: int) -> IntervalRep:
    parts = tuple(parts)
    if len(parts) != s or any(c < 0 for c in parts) or sum(parts) != t - 1:
        raise ValueError(f"{parts} no es composición débil de {t - 1} en {s} partes")
    acc = s + 1
    breakpoints = []
    for c in parts[:-1]:
        acc += c
        breakpoints.append(acc)
    return IntervalRep(s=s, t=t, breakpoints=tuple(breakpoints))


# ============================================================
# ENUMERACIÓN
# ============================================================

def enumerate_spanning_thrackles(s: int, t: int) -> Iterator[SpanningThrackle]:
    """
    Emite cada thrackle generador una vez, en orden lexicográfico de puntos
    de corte. Total: C(s+t−2, s−1).
    """
    _check_sizes(s, t)
    emitted = 0
    for breakpoints in combinations_with_replacement(range(s + 1, s + t + 1), s - 1):
        emitted += 1
        yield interval_to_thrackle(IntervalRep(s=s, t=t, breakpoints=breakpoints))
    logger.debug(f"✅ {emitted} thrackles generadores de K_{{{s},{t}}}")


def brute_force_spanning_thrackles(s: int, t: int) -> Set[SpanningThrackle]:
    """
    Oráculo independiente: filtra todos los subconjuntos de s+t−1 aristas.
    """
    _check_sizes(s, t)
    guard_size(s * t, BRUTE_FORCE_MAX_EDGES, "s·t")
    g = EmbeddedBipartite(s=s, t=t)
    edges = all_edges(g)
    meet = [[meets(a, b) for b in edges] for a in edges]
    found: Set[SpanningThrackle] = set()
    for combo in combinations(range(len(edges)), g.n - 1):
        covered = {edges[i].left for i in combo} | {edges[i].right for i in combo}
        if len(covered) != g.n:
            continue
        if all(meet[a][b] for a, b in combinations(combo, 2)):
            found.add(SpanningThrackle(graph=g, edges=frozenset(edges[i] for i in combo)))
    logger.info(f"🔍 Fuerza bruta K_{{{s},{t}}}: {len(found)} thrackles generadores")
    return found


def count_by_first_degree(s: int, t: int) -> Dict[int, int]:
    """Número de thrackles generadores según el grado del vértice 1."""
    counts: Dict[int, int] = {}
    for h in enumerate_spanning_thrackles(s, t):
        d = sum(1 for e in h.edges if e.left == 1)
        counts[d] = counts.get(d, 0) + 1
    return dict(sorted(counts.items()))


# ============================================================
# CONTEO
# ============================================================

class ThrackleCounter:
    """
    Tabla memoizada de f(s,t) = Σ_{i=0}^{t−1} f(s−1, t−i), f(1,t) = 1.

    Responsabilidades:
    - Llenar la tabla de abajo hacia arriba (sin recursión)
    - Acceso sincronizado: llamadores concurrentes ven valores correctos
    """

    def __init__(self):
        self._memo: Dict[Tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def f(self, s: int, t: int) -> int:
        _check_sizes(s, t)
        with self._lock:
            if (s, t) not in self._memo:
                self._fill(s, t)
            return self._memo[(s, t)]

    def _fill(self, s: int, t: int) -> None:
        memo = self._memo
        for b in range(1, t + 1):
            memo.setdefault((1, b), 1)
        for a in range(2, s + 1):
            for b in range(1, t + 1):
                if (a, b) not in memo:
                    memo[(a, b)] = sum(memo[(a - 1, b - i)] for i in range(b))

    def __len__(self) -> int:
        return len(self._memo)


_default_counter = ThrackleCounter()


def count_recurrence(s: int, t: int) -> int:
    return _default_counter.f(s, t)


def count_closed_form(s: int, t: int) -> int:
    """f(s,t) = C(s+t−2, s−1)."""
    _check_sizes(s, t)
    return comb(s + t - 2, s - 1)


def spanning_tree_formula(s: int, t: int) -> int:
    """
    Árboles generadores de K_{s,t}: s^{t−1}·t^{s−1}.
    """
    _check_sizes(s, t)
    return s ** (t - 1) * t ** (s - 1)


def count_spanning_trees(s: int, t: int) -> int:
    """Teorema matriz-árbol: determinante (Bareiss) del laplaciano reducido."""
    _check_sizes(s, t)
    n = s + t
    lap = [[0] * n for _ in range(n)]
    for i in range(s):
        for j in range(s, n):
            lap[i][j] = lap[j][i] = -1
    for i in range(s):
        lap[i][i] = t
    for j in range(s, n):
        lap[j][j] = s
    minor = Matrix([row[1:] for row in lap[1:]])
    return int(minor.det(method="bareiss"))


# ============================================================
# BIYECCIÓN Φ
# ============================================================

def phi(h: Thrackle) -> BitString:
    """
    Recorre v = s+1 … s+t−1: un "0" por cada vecino izquierdo w ≠ 1 aún sin
    marcar (en orden creciente, marcándolo), luego un "1". Al final, un "0"
    por cada vecino w ≠ 1 sin marcar de s+t.
    """
    h = _as_spanning(h)
    g = h.graph
    adj = h.neighbors()
    marked: Set[int] = set()
    out: List[str] = []

    def _emit_zeros(v: int) -> None:
        for w in adj.get(v, []):
            if w != 1 and w not in marked:
                out.append("0")
                marked.add(w)

    for v in range(g.s + 1, g.n):
        _emit_zeros(v)
        out.append("1")
    _emit_zeros(g.n)
    return BitString(bits="".join(out))


def phi_inverse(b, s: int, t: int) -> SpanningThrackle:
    """
    Reconstruye los puntos de corte: el k-ésimo "0" fija i_k en el vértice
    derecho actual; cada "1" avanza al siguiente.

    Raises:
        ValueError: Si la cadena no tiene s−1 ceros y t−1 unos
    """
    _check_sizes(s, t)
    bits = b if isinstance(b, BitString) else BitString(bits=str(b))
    if bits.zeros != s - 1 or bits.ones != t - 1:
        raise ValueError(f"'{bits}' debe tener {s - 1} ceros y {t - 1} unos")
    v = s + 1
    breakpoints = []
    for ch in bits.bits:
        if ch == "0":
            breakpoints.append(v)
        else:
            v += 1
    return interval_to_thrackle(IntervalRep(s=s, t=t, breakpoints=tuple(breakpoints)))


# ============================================================
# THRACKLES MAXIMALES DE UN SUBGRAFO
# ============================================================

def maximal_thrackles(g: EmbeddedBipartite, g_sub: Iterable[Edge]) -> List[FrozenSet[Edge]]:
    """
    Subconjuntos maximales (por inclusión) de g_sub que son thrackles.

    Son exactamente las cliques maximales del grafo de compatibilidad
    "meets" (Bron–Kerbosch con pivote de networkx).
    """
    edges = sorted(set(_check_membership(g, g_sub)))
    guard_size(len(edges), MAXIMAL_THRACKLE_MAX_EDGES, "|g_sub|")
    if not edges:
        return [frozenset()]
    compat = nx.Graph()
    compat.add_nodes_from(edges)
    compat.add_edges_from((a, b) for a, b in combinations(edges, 2) if meets(a, b))
    cliques = [frozenset(c) for c in nx.find_cliques(compat)]
    cliques.sort(key=lambda c: [e.key for e in sorted(c)])
    logger.debug(f"🔍 {len(cliques)} thrackles maximales en {len(edges)} aristas")
    return cliques


# ============================================================
# EXPORTACIONES PÚBLICAS
# ============================================================

__all__ = [
    "BRUTE_FORCE_MAX_EDGES",
    "MAXIMAL_THRACKLE_MAX_EDGES",
    "is_thrackle",
    "is_acyclic",
    "is_spanning_thrackle",
    "make_spanning_thrackle",
    "interval_to_thrackle",
    "thrackle_to_interval",
    "to_weak_composition",
    "from_weak_composition",
    "enumerate_spanning_thrackles",
    "brute_force_spanning_thrackles",
    "count_by_first_degree",
    "ThrackleCounter",
    "count_recurrence",
    "count_closed_form",
    "spanning_tree_formula",
    "count_spanning_trees",
    "phi",
    "phi_inverse",
    "maximal_thrackles",
]

# ============================================================
# thrackles/services/matroid_service.py
# Matroides por lista de bases, adyacencia y conos tangentes
# ============================================================

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, List, Optional, Sequence, Tuple

from thrackles.models.graph import Edge, EmbeddedBipartite
from thrackles.models.matroid import Basis, MatroidBases, TangentConeReport, TangentSubgraph
from thrackles.models.polytope import LatticePoint
from thrackles.services.thrackle_service import maximal_thrackles
from thrackles.utils import guard_size

logger = logging.getLogger(__name__)

RELABELING_MAX = 720

CAVEAT = (
    "thrackles maximales de cardinalidad distinta: no se afirma que "
    "formen una triangulación del subcono"
)


# ============================================================
# V1 PRINCIPIOS DEL CONO TANGENTE
# ============================================================
# 1. Arista (i, j) del subgrafo ⇔ B∖{i}∪{j} es base
# 2. B se reetiqueta sobre {1..r} y [n]∖B sobre {r+1..n}
# 3. El reetiquetado por defecto respeta el orden y queda en el reporte
# 4. Para matroides no uniformes solo se reportan conteos
# ============================================================


# ============================================================
# CONSTRUCCIÓN
# ============================================================

def uniform_bases(r: int, n: int) -> MatroidBases:
    """U^{r,n}: todos los r-subconjuntos de [n]."""
    if not 1 <= r <= n:
        raise ValueError(f"Se requiere 1 ≤ r ≤ n (r={r}, n={n})")
    return MatroidBases(n=n, r=r, bases=list(combinations(range(1, n + 1), r)))


def _swap(b: Basis, out: int, into: int) -> Basis:
    return tuple(sorted((set(b) - {out}) | {into}))


def validate_bases(m: MatroidBases) -> bool:
    """
    Axioma de intercambio: para B1, B2 y i ∈ B1∖B2 existe j ∈ B2∖B1 con
    B1∖{i}∪{j} base.
    """
    bases = set(m.bases)
    for b1 in m.bases:
        for b2 in m.bases:
            extra = set(b2) - set(b1)
            for i in set(b1) - set(b2):
                if not any(_swap(b1, i, j) in bases for j in extra):
                    logger.debug(f"🔍 Intercambio falla: B1={b1} B2={b2} i={i}")
                    return False
    return True


def make_matroid(n: int, r: int, bases: Iterable[Iterable[int]]) -> MatroidBases:
    """
    Construye y valida una matroide.

    Raises:
        ValueError: Estructura inválida o axioma de intercambio violado
    """
    m = MatroidBases(n=n, r=r, bases=[tuple(b) for b in bases])
    if not validate_bases(m):
        raise ValueError("Las bases no cumplen el axioma de intercambio")
    logger.info(f"✅ Matroide n={n} r={r} con {len(m.bases)} bases")
    return m


def load_matroid(text: str) -> MatroidBases:
    """Lee {"n": …, "r": …, "bases": [[…], …]} y valida el intercambio."""
    m = MatroidBases.model_validate_json(text)
    if not validate_bases(m):
        raise ValueError("Las bases no cumplen el axioma de intercambio")
    return m


def incidence_vector(b: Iterable[int], n: int) -> LatticePoint:
    """e_B = Σ_{i∈B} e_i."""
    coords = [0] * n
    for i in b:
        if not 1 <= i <= n:
            raise ValueError(f"Elemento {i} fuera de [1, {n}]")
        coords[i - 1] = 1
    return LatticePoint(coords=tuple(coords))


# ============================================================
# ADYACENCIA Y SUBGRAFO TANGENTE
# ============================================================

def _require_basis(b: Iterable[int], m: MatroidBases) -> Basis:
    basis = tuple(sorted(b))
    if not m.has_basis(basis):
        raise ValueError(f"{list(basis)} no es base de la matroide")
    return basis


def adjacent_bases(b: Iterable[int], m: MatroidBases) -> List[Basis]:
    """Bases que difieren de B en un único intercambio (aristas de P(M))."""
    basis = _require_basis(b, m)
    return [other for other in m.bases if len(set(other) - set(basis)) == 1]


def tangent_subgraph(
    b: Iterable[int],
    m: MatroidBases,
    left_order: Optional[Sequence[int]] = None,
    right_order: Optional[Sequence[int]] = None,
) -> TangentSubgraph:
    """
    Subgrafo de K_{r,n−r} con una arista por intercambio válido en B.

    `left_order` / `right_order` fijan el reetiquetado de B y de [n]∖B;
    por defecto, el orden natural.
    """
    basis = _require_basis(b, m)
    complement = tuple(x for x in range(1, m.n + 1) if x not in basis)
    left_order = tuple(left_order) if left_order is not None else basis
    right_order = tuple(right_order) if right_order is not None else complement
    if sorted(left_order) != list(basis) or sorted(right_order) != list(complement):
        raise ValueError("El reetiquetado debe ser una permutación de B y de su complemento")

    left_labels = {x: pos for pos, x in enumerate(left_order, start=1)}
    right_labels = {x: m.r + pos for pos, x in enumerate(right_order, start=1)}
    edges = sorted(
        Edge(left=left_labels[i], right=right_labels[j])
        for i in basis
        for j in complement
        if m.has_basis(_swap(basis, i, j))
    )
    return TangentSubgraph(
        base=basis,
        r=m.r,
        n=m.n,
        edges=tuple(edges),
        left_labels=left_labels,
        right_labels=right_labels,
    )


# ============================================================
# CONTEO DE THRACKLES MAXIMALES
# ============================================================

def _uniform_bound(r: int, n: int) -> int:
    return comb(n - 2, r - 1) if r < n else 1


def _maximal_sizes(sub: TangentSubgraph) -> Tuple[int, ...]:
    if sub.r == sub.n:
        return (0,)
    g = EmbeddedBipartite.for_matroid(sub.r, sub.n)
    return tuple(len(c) for c in maximal_thrackles(g, sub.edges))


def tangent_cone_simplex_count(
    b: Iterable[int],
    m: MatroidBases,
    left_order: Optional[Sequence[int]] = None,
    right_order: Optional[Sequence[int]] = None,
) -> TangentConeReport:
    """
    Cuenta los thrackles maximales del subgrafo tangente en B.

    Para U^{r,n} coincide con C(n−2, r−1) en toda base. Si los thrackles
    maximales no comparten cardinalidad, el reporte lo advierte en `note`.
    """
    sub = tangent_subgraph(b, m, left_order, right_order)
    sizes = _maximal_sizes(sub)
    bound = _uniform_bound(m.r, m.n)
    equal = len(set(sizes)) == 1
    report = TangentConeReport(
        base=sub.base,
        relabeling={**sub.left_labels, **sub.right_labels},
        edges=tuple(e.key for e in sub.edges),
        count=len(sizes),
        sizes=sizes,
        equal_cardinality=equal,
        uniform_bound=bound,
        within_bound=len(sizes) <= bound,
        note="" if equal else CAVEAT,
    )
    if not equal:
        logger.warning(f"⚠️ Base {list(sub.base)}: {CAVEAT}")
    return report


def matroid_reports(
    m: MatroidBases,
    basis: Optional[Iterable[int]] = None,
    threads: int = 1,
) -> List[TangentConeReport]:
    """Un reporte por base (o solo para `basis`), en orden lexicográfico."""
    targets = [_require_basis(basis, m)] if basis is not None else list(m.bases)
    if threads <= 1 or len(targets) <= 1:
        return [tangent_cone_simplex_count(b, m) for b in targets]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda b: tangent_cone_simplex_count(b, m), targets))


def relabeling_spread(b: Iterable[int], m: MatroidBases) -> Tuple[int, int]:
    """
    (mínimo, máximo) del conteo de thrackles maximales sobre todos los
    reetiquetados de B y de su complemento.

    Raises:
        SizeGuardError: Más de 720 reetiquetados
    """
    basis = _require_basis(b, m)
    complement = tuple(x for x in range(1, m.n + 1) if x not in basis)
    guard_size(factorial(len(basis)) * factorial(len(complement)), RELABELING_MAX, "reetiquetados")

    counts = [
        tangent_cone_simplex_count(basis, m, lo, ro).count
        for lo in permutations(basis)
        for ro in permutations(complement)
    ]
    spread = (min(counts), max(counts))
    logger.info(f"✅ Base {list(basis)}: conteos en [{spread[0]}, {spread[1]}] sobre {len(counts)} reetiquetados")
    return spread


# ============================================================
# EXPORTACIONES PÚBLICAS
# ============================================================

__all__ = [
    "RELABELING_MAX",
    "uniform_bases",
    "validate_bases",
    "make_matroid",
    "load_matroid",
    "incidence_vector",
    "adjacent_bases",
    "tangent_subgraph",
    "tangent_cone_simplex_count",
    "matroid_reports",
    "relabeling_spread",
]

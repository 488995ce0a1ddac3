# ============================================================
# thrackles/services/triangulation_service.py
# Δ_≻ a partir de thrackles generadores: construcción y certificación
# ============================================================

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from sympy import Matrix

from thrackles.models.polytope import LatticePoint, Simplex
from thrackles.models.records import SummaryRecord
from thrackles.models.triangulation import ConeDescription, Triangulation
from thrackles.services import lattice_service, thrackle_service
from thrackles.utils import guard_size, to_fraction

logger = logging.getLogger(__name__)

TRIANGULATION_MAX_N = 12
VOLUME_ORACLE_MAX_N = 8

T = TypeVar("T")
R = TypeVar("R")


def _map(fn: Callable[[T], R], items: Sequence[T], threads: int) -> List[R]:
    """map que conserva el orden; en paralelo si threads > 1."""
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# ============================================================
# CONSTRUCCIÓN
# ============================================================

def build_triangulation(r: int, n: int) -> Triangulation:
    """
    Un símplice por thrackle generador de K_{r,n−r}; sus vértices son los
    puntos e_i + e_j de las aristas del thrackle. Total: C(n−2, r−1).
    """
    if not 1 <= r < n:
        raise ValueError(f"Se requiere 1 ≤ r < n (r={r}, n={n})")
    guard_size(n, TRIANGULATION_MAX_N, "n")

    thrackles = list(thrackle_service.enumerate_spanning_thrackles(r, n - r))
    simplices = [
        Simplex(vertices=tuple(lattice_service.b_point(e, n) for e in h.sorted_edges))
        for h in thrackles
    ]
    logger.info(f"✅ Δ_≻(r={r}, n={n}): {len(simplices)} símplices")
    return Triangulation(r=r, n=n, simplices=tuple(simplices), thrackles=tuple(thrackles))


def expected_count(r: int, n: int) -> int:
    return comb(n - 2, r - 1)


# ============================================================
# UNIMODULARIDAD Y VOLUMEN
# ============================================================

def simplex_volumes(t: Triangulation, threads: int = 1) -> List[int]:
    return _map(lambda sx: lattice_service.normalized_simplex_volume(sx, t.r, t.n), list(t.simplices), threads)


def verify_unimodular(t: Triangulation, threads: int = 1) -> bool:
    """Todos los símplices tienen volumen normalizado 1."""
    volumes = simplex_volumes(t, threads)
    bad = [i for i, v in enumerate(volumes) if v != 1]
    if bad:
        logger.warning(f"⚠️ Símplices no unimodulares en (r={t.r}, n={t.n}): {bad[:5]}")
    return not bad


def verify_volume(t: Triangulation, threads: int = 1) -> bool:
    """
    Σ volúmenes = volumen normalizado de conv(B_{r,n}) según el ajuste de
    Ehrhart: certifica que los símplices llenan el politopo sin solaparse.
    """
    guard_size(t.n, VOLUME_ORACLE_MAX_N, "n (oráculo de Ehrhart)")
    total = sum(simplex_volumes(t, threads))
    oracle = lattice_service.ehrhart_fit(t.r, t.n).normalized_volume
    if total != oracle:
        logger.warning(f"⚠️ Volumen: Σ símplices={total} ≠ Ehrhart={oracle}")
    return total == oracle


# ============================================================
# LOCALIZACIÓN DE PUNTOS (COORDENADAS BARICÉNTRICAS EXACTAS)
# ============================================================

Frame = Optional[List[List[Fraction]]]


def _barycentric_frame(sx: Simplex, r: int, n: int) -> Frame:
    """Inversa exacta de [vértices proyectados; 1…1], o None si es degenerado."""
    charts = [lattice_service.chart_project(v, r, n) for v in sx.vertices]
    rows = [[c[d] for c in charts] for d in range(n - 2)]
    rows.append([1] * len(charts))
    m = Matrix(rows)
    if m.rows != m.cols or m.det(method="bareiss") == 0:
        return None
    inv = m.inv()
    return [[to_fraction(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]


def _barycentric(frame: Frame, y: Sequence[Fraction]) -> List[Fraction]:
    rhs = [*y, Fraction(1)]
    return [sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for row in frame]


def barycentric_coordinates(q: Sequence, sx: Simplex, r: int, n: int) -> Optional[List[Fraction]]:
    frame = _barycentric_frame(sx, r, n)
    if frame is None:
        return None
    y = [to_fraction(c) for c in lattice_service.chart_project(q, r, n)]
    return _barycentric(frame, y)


def locate_points(points: Sequence[Sequence], t: Triangulation) -> List[List[int]]:
    """Para cada punto, los índices de los símplices que lo contienen."""
    frames = [_barycentric_frame(sx, t.r, t.n) for sx in t.simplices]
    located = []
    for q in points:
        y = [to_fraction(c) for c in lattice_service.chart_project(q, t.r, t.n)]
        hits = []
        for idx, frame in enumerate(frames):
            if frame is None:
                continue
            if all(lam >= 0 for lam in _barycentric(frame, y)):
                hits.append(idx)
        located.append(hits)
    return located


def locate_point(q: Sequence, t: Triangulation) -> List[int]:
    """
    Todos los símplices que contienen q (coordenadas baricéntricas ≥ 0).

    Raises:
        ValueError: Si q no está en el span afín de B_{r,n}
    """
    return locate_points([q], t)[0]


def sample_interior_points(r: int, n: int, count: int, seed: int = 0) -> List[Tuple[Fraction, ...]]:
    """Combinaciones convexas racionales con pesos positivos de todo B_{r,n}."""
    rng = random.Random(seed)
    points = lattice_service.b_points(r, n)
    samples = []
    for _ in range(count):
        weights = [rng.randint(1, 1000) for _ in points]
        total = sum(weights)
        samples.append(tuple(
            Fraction(sum(w * p.coords[d] for w, p in zip(weights, points)), total)
            for d in range(n)
        ))
    return samples


def verify_covering(t: Triangulation, samples: int = 100, seed: int = 0) -> Tuple[int, int, int]:
    """
    Muestreo de cobertura disjunta.

    Returns:
        (muestras, aceptadas, exactamente_uno): se aceptan las que no caen
        sobre una cara compartida (ninguna coordenada baricéntrica nula en
        los símplices que las contienen). Un punto sin símplice cuenta como
        aceptado y nunca como exactamente_uno.
    """
    frames = [_barycentric_frame(sx, t.r, t.n) for sx in t.simplices]
    accepted = exact_one = 0
    points = sample_interior_points(t.r, t.n, samples, seed)
    for q in points:
        y = [to_fraction(c) for c in lattice_service.chart_project(q, t.r, t.n)]
        containing = []
        for frame in frames:
            if frame is None:
                continue
            lam = _barycentric(frame, y)
            if all(x >= 0 for x in lam):
                containing.append(lam)
        if not containing:
            logger.error(f"❌ Punto interior sin símplice: {[str(c) for c in q]}")
            accepted += 1
            continue
        if any(x == 0 for lam in containing for x in lam):
            continue
        accepted += 1
        if len(containing) == 1:
            exact_one += 1
    return len(points), accepted, exact_one


# ============================================================
# VISTA DE CONO TANGENTE
# ============================================================

def tangent_cone_view(t: Triangulation) -> List[ConeDescription]:
    """
    Aplica la involución (su propia inversa) a los vértices de cada símplice:
    generadores en E_{r,n} con ápice e_B, B = {1..r}.
    """
    apex = LatticePoint(coords=tuple([1] * t.r + [0] * (t.n - t.r)))
    return [
        ConeDescription(
            apex=apex,
            generators=tuple(lattice_service.involution_map(v, t.r) for v in sx.vertices),
        )
        for sx in t.simplices
    ]


# ============================================================
# RESUMEN DE VERIFICACIÓN
# ============================================================

def summarize(r: int, n: int, samples: int = 100, seed: int = 0, threads: int = 1) -> SummaryRecord:
    """Cardinalidad, unimodularidad, volumen (n ≤ 8) y cobertura muestreada."""
    t = build_triangulation(r, n)
    expected = expected_count(r, n)
    volumes = simplex_volumes(t, threads)
    unimodular = sum(1 for v in volumes if v == 1)

    volume_ok: Optional[bool] = None
    volume = "skipped"
    if n <= VOLUME_ORACLE_MAX_N:
        oracle = lattice_service.ehrhart_fit(r, n).normalized_volume
        volume_ok = sum(volumes) == oracle
        volume = f"{sum(volumes)}/{oracle}"

    drawn, accepted, exact_one = verify_covering(t, samples, seed) if samples > 0 else (0, 0, 0)
    covering_ok = exact_one == accepted and drawn >= accepted

    ok = (
        t.count == expected
        and unimodular == t.count
        and volume_ok is not False
        and covering_ok
    )
    summary = SummaryRecord(
        r=r,
        n=n,
        count=t.count,
        expected=expected,
        unimodular=f"{unimodular}/{t.count}",
        volume_ok=volume_ok,
        volume=volume,
        covering=f"{exact_one}/{accepted}",
        ok=ok,
    )
    log = logger.info if ok else logger.warning
    log(f"{'✅' if ok else '⚠️'} Verificación (r={r}, n={n}): {summary.model_dump()}")
    return summary


# ============================================================
# EXPORTACIONES PÚBLICAS
# ============================================================

__all__ = [
    "TRIANGULATION_MAX_N",
    "VOLUME_ORACLE_MAX_N",
    "build_triangulation",
    "expected_count",
    "simplex_volumes",
    "verify_unimodular",
    "verify_volume",
    "barycentric_coordinates",
    "locate_points",
    "locate_point",
    "sample_interior_points",
    "verify_covering",
    "tangent_cone_view",
    "summarize",
]

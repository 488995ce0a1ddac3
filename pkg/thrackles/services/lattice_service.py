# ============================================================
# thrackles/services/lattice_service.py
# Puntos B_{r,n} / E_{r,n}, involución, volúmenes exactos y Ehrhart
# ============================================================

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy import Matrix, Poly, interpolate, symbols

from thrackles.models.graph import Edge
from thrackles.models.polytope import EhrhartPoly, LatticePoint, Simplex
from thrackles.utils import Rational, fraction_pair, guard_size, to_fraction

logger = logging.getLogger(__name__)

EHRHART_MAX_N = 10


def _check_rank(r: int, n: int) -> None:
    if not 1 <= r < n:
        raise ValueError(f"Se requiere 1 ≤ r < n (r={r}, n={n})")


# ============================================================
# B_{r,n} Y E_{r,n}
# ============================================================

def b_point(e: Edge, n: int) -> LatticePoint:
    """e_i + e_j para la arista (i, j)."""
    coords = [0] * n
    coords[e.left - 1] = 1
    coords[e.right - 1] = 1
    return LatticePoint(coords=tuple(coords))


def e_point(e: Edge, n: int) -> LatticePoint:
    """e_j − e_i para la arista (i, j)."""
    coords = [0] * n
    coords[e.left - 1] = -1
    coords[e.right - 1] = 1
    return LatticePoint(coords=tuple(coords))


def _edges(r: int, n: int) -> List[Edge]:
    return [Edge(left=i, right=j) for i in range(1, r + 1) for j in range(r + 1, n + 1)]


def b_points(r: int, n: int) -> List[LatticePoint]:
    """Las r·(n−r) columnas de la matriz de incidencia de K_{r,n−r}."""
    _check_rank(r, n)
    return [b_point(e, n) for e in _edges(r, n)]


def e_points(r: int, n: int) -> List[LatticePoint]:
    """Direcciones de arista e_j − e_i del vértice e_B, B = {1..r}."""
    _check_rank(r, n)
    return [e_point(e, n) for e in _edges(r, n)]


def involution_map(p: LatticePoint, r: int) -> LatticePoint:
    """diag(−I_r, I_{n−r}): niega las primeras r coordenadas."""
    if p.dim < r:
        raise ValueError(f"Punto de dimensión {p.dim} < r={r}")
    return LatticePoint(coords=tuple(-x for x in p.coords[:r]) + p.coords[r:])


def e_hyperplane_value(r: int, n: int) -> int:
    """
    Valor constante de [1..1, −1..−1]·x sobre E_{r,n}.

    Es −2: el hiperplano no pasa por el origen.
    """
    normal = [1] * r + [-1] * (n - r)
    values = {sum(a * b for a, b in zip(normal, p.coords)) for p in e_points(r, n)}
    if len(values) != 1:
        raise ValueError(f"E_{{{r},{n}}} no está en un hiperplano de normal {normal}")
    return values.pop()


# ============================================================
# DIMENSIÓN Y CARTA AFÍN
# ============================================================

def affine_dim(points: Sequence[LatticePoint]) -> int:
    """Rango exacto de los vectores diferencia respecto del primer punto."""
    if not points:
        raise ValueError("affine_dim requiere al menos un punto")
    base = points[0].coords
    rows = [[a - b for a, b in zip(p.coords, base)] for p in points[1:]]
    if not rows:
        return 0
    return Matrix(rows).rank()


def chart_project(
    p,
    r: int,
    n: int,
    dropped: Optional[Tuple[int, int]] = None,
    level: Rational = 1,
) -> Tuple[Rational, ...]:
    """
    Borra las coordenadas `dropped` (por defecto 1 y r+1, base 1).

    Sobre el retículo afín de B_{r,n} es una biyección con Z^{n−2}: las
    coordenadas borradas se recuperan de Σ_{i≤r} p_i = Σ_{j>r} p_j = level.

    Raises:
        ValueError: Si p viola alguna de las dos sumas
    """
    _check_rank(r, n)
    coords = tuple(p.coords if isinstance(p, LatticePoint) else p)
    if len(coords) != n:
        raise ValueError(f"Punto de longitud {len(coords)} en ambiente n={n}")
    if sum(coords[:r]) != level or sum(coords[r:]) != level:
        raise ValueError(f"{list(coords)} fuera del span afín de B_{{{r},{n}}}")
    lo, hi = dropped or (1, r + 1)
    if not (1 <= lo <= r < hi <= n):
        raise ValueError(f"Coordenadas a borrar inválidas: {(lo, hi)}")
    return tuple(x for idx, x in enumerate(coords, start=1) if idx not in (lo, hi))


def chart_lift(y: Sequence[Rational], r: int, n: int, level: Rational = 1) -> Tuple[Rational, ...]:
    """Inversa de chart_project con la carta por defecto."""
    _check_rank(r, n)
    y = list(y)
    if len(y) != n - 2:
        raise ValueError(f"Se esperaban {n - 2} coordenadas")
    left = y[: r - 1]
    right = y[r - 1 :]
    return (level - sum(left), *left, level - sum(right), *right)


# ============================================================
# VOLÚMENES NORMALIZADOS
# ============================================================

def normalized_simplex_volume(
    sx: Simplex,
    r: int,
    n: int,
    dropped: Optional[Tuple[int, int]] = None,
) -> int:
    """
    |det| de los vectores diferencia proyectados (vértice 0 como base),
    por eliminación libre de fracciones (Bareiss). 0 indica degeneración.
    """
    if len(sx.vertices) != n - 1:
        raise ValueError(f"Un símplice máximo tiene {n - 1} vértices, llegaron {len(sx.vertices)}")
    charts = [chart_project(v, r, n, dropped) for v in sx.vertices]
    if n == 2:
        return 1
    base = charts[0]
    rows = [[a - b for a, b in zip(c, base)] for c in charts[1:]]
    return abs(int(Matrix(rows).det(method="bareiss")))


# ============================================================
# PUNTOS DE RED DE LAS DILATACIONES (ORÁCULO DE FUERZA BRUTA)
# ============================================================

def _block_vectors(size: int, k: int) -> Iterator[Tuple[int, ...]]:
    # La primera coordenada del bloque queda fijada por la suma
    for rest in product(range(k + 1), repeat=size - 1):
        head = k - sum(rest)
        if head >= 0:
            yield (head, *rest)


def _in_dilate(x: Sequence[int], r: int, k: int) -> bool:
    return all(v >= 0 for v in x) and sum(x[:r]) == k and sum(x[r:]) == k


def lattice_points(r: int, n: int, k: int, first_coord: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Puntos enteros de k·conv(B_{r,n}) = {x ≥ 0, Σ_{i≤r} x_i = k, Σ_{j>r} x_j = k}.

    `first_coord` restringe a x_1 = valor (conteo particionado).
    """
    _check_rank(r, n)
    if k < 0:
        raise ValueError(f"Dilatación negativa k={k}")
    rights = list(_block_vectors(n - r, k))
    for left in _block_vectors(r, k):
        if first_coord is not None and left[0] != first_coord:
            continue
        for right in rights:
            x = left + right
            if _in_dilate(x, r, k):
                yield x


def count_lattice_points(r: int, n: int, k: int, first_coord: Optional[int] = None) -> int:
    """i(conv(B_{r,n}), k) por enumeración; i(P, 0) = 1."""
    return sum(1 for _ in lattice_points(r, n, k, first_coord))


def count_lattice_points_parallel(r: int, n: int, k: int, threads: int = 1) -> int:
    """Mismo conteo, particionado por el valor de x_1; independiente de la partición."""
    parts = list(range(k + 1))
    if threads <= 1:
        return sum(count_lattice_points(r, n, k, c) for c in parts)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(lambda c: count_lattice_points(r, n, k, c), parts))


def validate_h_description(r: int, n: int) -> None:
    """
    En k = 1 la descripción por desigualdades debe dar exactamente B_{r,n}.

    Raises:
        ValueError: Diagnóstico con la diferencia encontrada
    """
    enumerated = {LatticePoint(coords=x) for x in lattice_points(r, n, 1)}
    expected = set(b_points(r, n))
    if enumerated != expected or len(enumerated) != r * (n - r):
        extra = sorted(enumerated - expected)
        missing = sorted(expected - enumerated)
        logger.error(f"❌ Descripción H inválida para (r={r}, n={n}): extra={extra} faltan={missing}")
        raise ValueError(f"La descripción {{x ≥ 0, Σ = 1}} no reproduce B_{{{r},{n}}}")


# ============================================================
# POLINOMIO DE EHRHART
# ============================================================

def ehrhart_fit(r: int, n: int) -> EhrhartPoly:
    """
    Interpolación racional exacta por k = 0..n−2.

    El volumen normalizado es (coeficiente líder)·(n−2)!.
    """
    _check_rank(r, n)
    guard_size(n, EHRHART_MAX_N, "n")
    validate_h_description(r, n)

    x = symbols("k")
    data = [(k, count_lattice_points(r, n, k)) for k in range(n - 1)]
    expr = interpolate(data, x) if len(data) > 1 else data[0][1]
    descending = Poly(expr, x).all_coeffs()
    ascending = [to_fraction(c) for c in reversed(descending)]
    ascending += [to_fraction(0)] * (n - 1 - len(ascending))

    poly = EhrhartPoly(r=r, n=n, coefficients=tuple(fraction_pair(c) for c in ascending))
    logger.info(f"✅ Ehrhart (r={r}, n={n}): valores={[v for _, v in data]} volumen={poly.normalized_volume}")
    return poly


def certify_ehrhart(poly: EhrhartPoly, extra: int = 3) -> bool:
    """Compara el polinomio con la fuerza bruta en `extra` dilataciones adicionales."""
    start = poly.n - 1
    for k in range(start, start + extra):
        brute = count_lattice_points(poly.r, poly.n, k)
        if poly.evaluate(k) != brute:
            logger.error(f"❌ Ehrhart no certificado en k={k}: {poly.evaluate(k)} ≠ {brute}")
            return False
    return True


# ============================================================
# EXPORTACIONES PÚBLICAS
# ============================================================

__all__ = [
    "EHRHART_MAX_N",
    "b_point",
    "e_point",
    "b_points",
    "e_points",
    "involution_map",
    "e_hyperplane_value",
    "affine_dim",
    "chart_project",
    "chart_lift",
    "normalized_simplex_volume",
    "lattice_points",
    "count_lattice_points",
    "count_lattice_points_parallel",
    "validate_h_description",
    "ehrhart_fit",
    "certify_ehrhart",
]

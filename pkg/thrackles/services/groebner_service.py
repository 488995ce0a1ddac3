# ============================================================
# thrackles/services/groebner_service.py
# El conjunto C_g, orden de términos, reducción y verificación de Buchberger
# ============================================================

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.orderings import lex

from thrackles.models.algebra import Binomial, Monomial, TermOrder
from thrackles.models.graph import Edge, EmbeddedBipartite
from thrackles.services.embedding_service import all_edges, weight
from thrackles.utils import guard_size

logger = logging.getLogger(__name__)

BUCHBERGER_MAX_VARIABLES = 20


# ============================================================
# V1 PRINCIPIOS DE LA REDUCCIÓN
# ============================================================
# 1. Solo binomios puros (coeficientes ±1): cerrados bajo S-pares y reducción
# 2. `plus` es el término inicial marcado de cada elemento de la base
# 3. Reducir = reemplazar un par de aristas que no se cruzan por el par
#    que sí se cruza
# ============================================================


# ============================================================
# ORDEN DE VARIABLES Y MONOMIOS
# ============================================================

def _var_key(e: Edge) -> Tuple[int, int]:
    # Mayor clave ⇔ mayor variable: izquierda menor, luego derecha mayor
    return -e.left, e.right


def var_compare(e1: Edge, e2: Edge) -> int:
    """
    1 si x_{e1} ≻ x_{e2}, −1 si x_{e1} ≺ x_{e2}, 0 si son la misma.

    x_{ij} ≻ x_{kl} ⇔ i < k, o (i = k y j > l).
    """
    a, b = _var_key(e1), _var_key(e2)
    return (a > b) - (a < b)


@lru_cache(maxsize=None)
def ring_variables(r: int, n: int) -> Tuple[Edge, ...]:
    """Variables de K_{r,n−r} de mayor a menor."""
    g = EmbeddedBipartite.for_matroid(r, n)
    return tuple(sorted(all_edges(g), key=_var_key, reverse=True))


class _Frame:
    """Vectores de exponentes sobre un conjunto fijo de variables (de mayor a menor)."""

    def __init__(self, monomials: Iterable[Monomial]):
        support = set()
        for m in monomials:
            support |= m.support
        self.variables: List[Edge] = sorted(support, key=_var_key, reverse=True)
        self.index: Dict[Edge, int] = {e: i for i, e in enumerate(self.variables)}

    def vec(self, m: Monomial) -> Tuple[int, ...]:
        v = [0] * len(self.variables)
        for e, k in m.exponents:
            v[self.index[e]] = k
        return tuple(v)

    def mono(self, v: Sequence[int]) -> Monomial:
        return Monomial.from_map({e: k for e, k in zip(self.variables, v) if k})


def monomial_weight(m: Monomial, g: EmbeddedBipartite) -> int:
    """Σ exponente·peso(arista)."""
    return sum(k * weight(e, g) for e, k in m.exponents)


def mono_compare(
    m1: Monomial,
    m2: Monomial,
    order: TermOrder = TermOrder.LEX,
    g: Optional[EmbeddedBipartite] = None,
) -> int:
    """
    Compara dos monomios: 1 si m1 ≻ m2, −1 si m1 ≺ m2, 0 si iguales.

    - LEX: exponentes leídos de la variable mayor a la menor
    - WEIGHT_LEX: peso total primero (mayor peso ⇒ mayor), luego lex
    """
    if order == TermOrder.WEIGHT_LEX:
        if g is None:
            raise ValueError("El orden por pesos necesita el grafo K_{r,n−r}")
        w1, w2 = monomial_weight(m1, g), monomial_weight(m2, g)
        if w1 != w2:
            return 1 if w1 > w2 else -1
    frame = _Frame((m1, m2))
    a, b = lex(frame.vec(m1)), lex(frame.vec(m2))
    return (a > b) - (a < b)


# ============================================================
# C_g
# ============================================================

def generate_cg(r: int, n: int) -> List[Binomial]:
    """
    Un binomio por cada par no ordenado de aristas disjuntas que no se cruzan.

    Para i < k a la izquierda y j < l a la derecha el par que no se cruza es
    {(i,l),(k,j)} (término inicial) y el que se cruza es {(i,j),(k,l)}.
    Total: C(r,2)·C(n−r,2).
    """
    if not 1 <= r < n:
        raise ValueError(f"Se requiere 1 ≤ r < n (r={r}, n={n})")
    basis = []
    for i, k in combinations(range(1, r + 1), 2):
        for j, l in combinations(range(r + 1, n + 1), 2):
            plus = Monomial.from_edges([Edge(left=i, right=l), Edge(left=k, right=j)])
            minus = Monomial.from_edges([Edge(left=i, right=j), Edge(left=k, right=l)])
            basis.append(Binomial(plus=plus, minus=minus))
    logger.debug(f"🔍 C_g(r={r}, n={n}): {len(basis)} binomios")
    return basis


@lru_cache(maxsize=None)
def _initial_terms(r: int, n: int) -> Tuple[Monomial, ...]:
    return tuple(b.plus for b in generate_cg(r, n))


def render_binomial(b: Binomial) -> str:
    """Texto de la forma x[1,4]*x[2,3] - x[1,3]*x[2,4] (término inicial primero)."""
    return str(b)


def corrupt_basis(basis: Sequence[Binomial], index: int = 0) -> List[Binomial]:
    """Control negativo: intercambia los términos finales de basis[index] y basis[index+1]."""
    if not 0 <= index < len(basis) - 1:
        raise ValueError(f"Índice {index} fuera de rango para una base de {len(basis)} elementos")
    corrupted = list(basis)
    a, b = corrupted[index], corrupted[index + 1]
    corrupted[index] = Binomial(plus=a.plus, minus=b.minus)
    corrupted[index + 1] = Binomial(plus=b.plus, minus=a.minus)
    return corrupted


# ============================================================
# REDUCCIÓN
# ============================================================

def mis_marked(
    basis: Sequence[Binomial],
    order: TermOrder = TermOrder.LEX,
    g: Optional[EmbeddedBipartite] = None,
) -> List[Binomial]:
    """Binomios cuyo término marcado no es el mayor en el orden."""
    return [b for b in basis if mono_compare(b.plus, b.minus, order, g) <= 0]


def _check_marking(basis: Sequence[Binomial], order: TermOrder, g: Optional[EmbeddedBipartite]) -> None:
    bad = mis_marked(basis, order, g)
    if bad:
        raise ValueError(f"Término inicial mal marcado en {bad[0]} para el orden {order.value}")


def reduce(
    m: Monomial,
    basis: Sequence[Binomial],
    order: TermOrder = TermOrder.LEX,
    g: Optional[EmbeddedBipartite] = None,
) -> Monomial:
    """
    Forma normal de m: mientras algún término inicial divida a m, se
    reemplaza ese submonomio por el término final. Termina porque cada
    paso baja estrictamente en el orden.
    """
    _check_marking(basis, order, g)
    frame = _Frame([m, *(b.plus for b in basis), *(b.minus for b in basis)])
    rules = [(frame.vec(b.plus), frame.vec(b.minus)) for b in basis]
    current = frame.vec(m)
    steps = 0
    while True:
        for lead, tail in rules:
            if monomial_divides(lead, current):
                current = monomial_mul(monomial_div(current, lead), tail)
                steps += 1
                break
        else:
            break
    if steps:
        logger.debug(f"🔍 reduce: {m} → {frame.mono(current)} en {steps} pasos")
    return frame.mono(current)


def s_poly_reduces_to_zero(
    b1: Binomial,
    b2: Binomial,
    basis: Sequence[Binomial],
    order: TermOrder = TermOrder.LEX,
    g: Optional[EmbeddedBipartite] = None,
) -> bool:
    """
    Con l = mcm(L1, L2), S(b1, b2) = (l/L2)·T2 − (l/L1)·T1 se reduce a cero
    ⇔ las formas normales de ambos términos coinciden. Primer criterio:
    líderes coprimos ⇒ True.
    """
    frame = _Frame((b1.plus, b1.minus, b2.plus, b2.minus))
    l1, l2 = frame.vec(b1.plus), frame.vec(b2.plus)
    if all(x == 0 or y == 0 for x, y in zip(l1, l2)):
        return True
    lcm = monomial_lcm(l1, l2)
    u = frame.mono(monomial_mul(monomial_div(lcm, l1), frame.vec(b1.minus)))
    v = frame.mono(monomial_mul(monomial_div(lcm, l2), frame.vec(b2.minus)))
    return reduce(u, basis, order, g) == reduce(v, basis, order, g)


def is_reduced(basis: Sequence[Binomial]) -> bool:
    """Ningún monomio de un elemento es divisible por el término inicial de otro."""
    frame = _Frame([*(b.plus for b in basis), *(b.minus for b in basis)])
    leads = [frame.vec(b.plus) for b in basis]
    for idx, b in enumerate(basis):
        for jdx, lead in enumerate(leads):
            if jdx != idx and monomial_divides(lead, frame.vec(b.plus)):
                return False
            if monomial_divides(lead, frame.vec(b.minus)):
                return False
    return True


def buchberger_check(
    r: int,
    n: int,
    basis: Optional[Sequence[Binomial]] = None,
    threads: int = 1,
) -> bool:
    """
    True ⇔ la base está bien marcada, vive en el ideal tórico, todos sus
    S-pares se reducen a cero y es reducida.

    Por defecto verifica C_g(r, n). Una base mal marcada devuelve False.
    """
    guard_size(r * (n - r), BUCHBERGER_MAX_VARIABLES, "r·(n−r)")
    basis = list(generate_cg(r, n) if basis is None else basis)

    bad = mis_marked(basis)
    if bad:
        logger.warning(f"⚠️ {len(bad)} binomios mal marcados, primero: {bad[0]}")
        return False
    outside = [b for b in basis if not in_kernel(b, r, n)]
    if outside:
        logger.warning(f"⚠️ {len(outside)} binomios fuera del ideal tórico, primero: {outside[0]}")
        return False

    pairs = list(combinations(basis, 2))

    def _check(pair) -> bool:
        return s_poly_reduces_to_zero(pair[0], pair[1], basis)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_check, pairs))
    else:
        results = [_check(p) for p in pairs]

    failed = [str(a) + " | " + str(b) for (a, b), ok in zip(pairs, results) if not ok]
    if failed:
        logger.warning(f"⚠️ {len(failed)} S-pares no se reducen a cero, primero: {failed[0]}")
        return False
    if not is_reduced(basis):
        logger.warning("⚠️ La base no es reducida")
        return False
    logger.info(f"✅ Buchberger (r={r}, n={n}): {len(basis)} binomios, {len(pairs)} S-pares")
    return True


# ============================================================
# MONOMIOS ESTÁNDAR Y NÚCLEO DEL MAPA TÓRICO
# ============================================================

def is_standard(m: Monomial, r: int, n: int) -> bool:
    """Ningún término inicial de C_g divide a m (⇔ el soporte es thrackle)."""
    if r < 2 or n - r < 2:
        return True
    frame = _Frame([m, *_initial_terms(r, n)])
    target = frame.vec(m)
    return not any(monomial_divides(frame.vec(lead), target) for lead in _initial_terms(r, n))


def walk_binomial(walk: Sequence[int], r: int, n: int) -> Binomial:
    """
    b_Γ = Π x_{i_{2l−1} i_{2l}} − Π x_{i_{2l} i_{2l+1}} para el camino cerrado
    par Γ = (i_1, …, i_{2k}, i_1).

    Raises:
        ValueError: Camino impar, no cerrado, que no alterna lados o nulo
    """
    walk = list(walk)
    steps = len(walk) - 1
    if steps < 2 or steps % 2 or walk[0] != walk[-1]:
        raise ValueError(f"El camino {walk} debe ser cerrado y de longitud par")
    edges = []
    for a, b in zip(walk, walk[1:]):
        lo, hi = min(a, b), max(a, b)
        if not (1 <= lo <= r < hi <= n):
            raise ValueError(f"El paso ({a},{b}) no alterna entre lados de K_{{{r},{n - r}}}")
        edges.append(Edge(left=lo, right=hi))
    odd = Monomial.from_edges(edges[0::2])
    even = Monomial.from_edges(edges[1::2])
    return Binomial(plus=odd, minus=even)


def _toric_image(m: Monomial) -> Counter:
    image: Counter = Counter()
    for e, k in m.exponents:
        image[e.left] += k
        image[e.right] += k
    return image


def in_kernel(b: Binomial, r: Optional[int] = None, n: Optional[int] = None) -> bool:
    """Ambos términos tienen la misma imagen bajo x_{ij} ↦ t_i t_j."""
    if r is not None and n is not None:
        for e in b.plus.support | b.minus.support:
            if not (1 <= e.left <= r < e.right <= n):
                raise ValueError(f"{e!r} no es arista de K_{{{r},{n - r}}}")
    return _toric_image(b.plus) == _toric_image(b.minus)


def toric_image(m: Monomial) -> Dict[int, int]:
    """Exponentes de t_1..t_n de la imagen de m."""
    return dict(sorted(_toric_image(m).items()))


# ============================================================
# EXPORTACIONES PÚBLICAS
# ============================================================

__all__ = [
    "BUCHBERGER_MAX_VARIABLES",
    "var_compare",
    "ring_variables",
    "monomial_weight",
    "mono_compare",
    "generate_cg",
    "render_binomial",
    "corrupt_basis",
    "mis_marked",
    "reduce",
    "s_poly_reduces_to_zero",
    "is_reduced",
    "buchberger_check",
    "is_standard",
    "walk_binomial",
    "in_kernel",
    "toric_image",
]

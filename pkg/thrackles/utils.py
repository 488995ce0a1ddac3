# ==========================================
# thrackles/utils.py
# Utilidades universales: racionales exactos y guardas de tamaño
# ==========================================

import logging
from fractions import Fraction
from typing import Any, Iterable, List, Tuple, Union

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


# =====================================================
# GUARDAS DE TAMAÑO (escala de escritorio)
# =====================================================

class SizeGuardError(ValueError):
    """La entrada excede el tamaño razonable para un cálculo exhaustivo."""


def guard_size(value: int, limit: int, label: str) -> None:
    """
    Aborta si `value` supera `limit`.

    Args:
        value: Magnitud medida (aristas, variables, n...)
        limit: Máximo permitido
        label: Nombre de la magnitud para el diagnóstico

    Raises:
        SizeGuardError: Si value > limit
    """
    if value > limit:
        logger.warning(f"⚠️ Guarda de tamaño: {label}={value} > {limit}")
        raise SizeGuardError(f"{label}={value} excede el máximo permitido ({limit})")


# =====================================================
# RACIONALES EXACTOS
# =====================================================

def to_fraction(value: Any) -> Fraction:
    """
    Normaliza enteros, Fraction y racionales de sympy a Fraction.

    Examples:
        >>> to_fraction(3)
        Fraction(3, 1)

        >>> to_fraction(sympy.Rational(1, 2))
        Fraction(1, 2)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    # sympy.Rational / sympy.Integer exponen p y q
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"Valor no racional: {value!r}")


def fraction_pair(value: Rational) -> Tuple[int, int]:
    """Convierte un racional a su par (numerador, denominador)."""
    f = to_fraction(value)
    return f.numerator, f.denominator


def pairs_to_fractions(pairs: Iterable[Tuple[int, int]]) -> List[Fraction]:
    return [Fraction(num, den) for num, den in pairs]


# =====================================================
# EXPORTACIONES PÚBLICAS
# =====================================================

__all__ = [
    "Rational",
    "SizeGuardError",
    "guard_size",
    "to_fraction",
    "fraction_pair",
    "pairs_to_fractions",
]

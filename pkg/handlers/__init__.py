# ============================================================
# handlers/__init__.py
# Registro de comandos de la CLI y utilidades compartidas
# ============================================================

import argparse
import logging
import sys

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def positive_int(text: str) -> int:
    """Tipo argparse: entero ≥ 1 (el error sale con código 2)."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' no es un entero")
    if value < 1:
        raise argparse.ArgumentTypeError(f"se esperaba un entero ≥ 1, llegó {value}")
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' no es un entero")
    if value < 0:
        raise argparse.ArgumentTypeError(f"se esperaba un entero ≥ 0, llegó {value}")
    return value


def add_rank_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--r", type=positive_int, required=True, help="Rango r (parte izquierda)")
    parser.add_argument("--n", type=positive_int, required=True, help="Tamaño del conjunto base n > r")


def add_sides_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--s", type=positive_int, required=True, help="Vértices izquierdos")
    parser.add_argument("--t", type=positive_int, required=True, help="Vértices derechos")


def fail(invariant: str) -> int:
    """Diagnóstico de verificación fallida en stderr; código 1."""
    print(f"FAILED: {invariant}", file=sys.stderr)
    logger.error(f"❌ Invariante violado: {invariant}")
    return EXIT_FAILED


def register_all(subparsers) -> None:
    from handlers import algebra, counting, matroids, polytope

    for module in (counting, algebra, polytope, matroids):
        module.register(subparsers)


__all__ = [
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_USAGE",
    "positive_int",
    "non_negative_int",
    "add_rank_args",
    "add_sides_args",
    "fail",
    "register_all",
]

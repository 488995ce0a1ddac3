# ============================================================
# main.py — thrackles CLI
# Triangulación por thrackles de conos tangentes de U^{r,n}
# ============================================================

import argparse
import logging
import sys
from typing import List, Optional

import settings
from handlers import EXIT_USAGE, positive_int, register_all

logger = logging.getLogger("thrackles")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thrackles",
        description="Thrackles generadores, C_g, Δ_≻ y sus oráculos de verificación",
    )
    parser.add_argument("--threads", type=positive_int, default=settings.THRACKLES_THREADS)
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=None)
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    register_all(subparsers)
    return parser


def _configure_logging(level: Optional[str]) -> None:
    # stderr: stdout queda reservado para la salida determinista
    logging.basicConfig(
        level=getattr(logging, level or settings.THRACKLES_LOG_LEVEL, logging.WARNING),
        stream=sys.stderr,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        force=True,
    )


def run(argv: Optional[List[str]] = None) -> int:
    """
    Ejecuta un comando y devuelve el código de salida.

    0 éxito, 1 verificación fallida (`FAILED: ...` en stderr), 2 uso inválido.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0

    _configure_logging(args.log_level)
    logger.debug(f"🔍 Comando {args.command} con {vars(args)}")

    try:
        return args.handler(args)
    except (ValueError, OSError) as e:
        logger.error(f"❌ {args.command}: {e}")
        print(parser.format_usage(), end="", file=sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(run())

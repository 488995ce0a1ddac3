# ============================================================
# handlers/counting.py
# Comandos count / enum / phi
# ============================================================

import logging

from thrackles import exports
from thrackles.services import thrackle_service

from handlers import EXIT_OK, add_sides_args, fail

logger = logging.getLogger(__name__)

COUNT_METHODS = {
    "closed": thrackle_service.count_closed_form,
    "recurrence": thrackle_service.count_recurrence,
    "enum": lambda s, t: sum(1 for _ in thrackle_service.enumerate_spanning_thrackles(s, t)),
    "brute": lambda s, t: len(thrackle_service.brute_force_spanning_thrackles(s, t)),
}


def _methods(text: str):
    methods = [m.strip() for m in text.split(",") if m.strip()]
    unknown = [m for m in methods if m not in COUNT_METHODS]
    if not methods or unknown:
        raise ValueError(f"Métodos desconocidos: {unknown or text!r} (use {', '.join(COUNT_METHODS)})")
    return methods


# ============================================================
# COUNT
# ============================================================

def handle_count(args) -> int:
    """Imprime f(s,t) por cada método; con varios, verifica que coincidan."""
    methods = _methods(args.method)
    values = [COUNT_METHODS[m](args.s, args.t) for m in methods]
    logger.info(f"🔍 count s={args.s} t={args.t}: {dict(zip(methods, values))}")
    line = " ".join(str(v) for v in values)
    if len(values) == 1:
        print(line)
        return EXIT_OK
    if len(set(values)) != 1:
        print(f"{line} MISMATCH")
        return fail(f"count: métodos {methods} discrepan")
    print(f"{line} OK")
    return EXIT_OK


# ============================================================
# ENUM
# ============================================================

def handle_enum(args) -> int:
    """Emite los thrackles generadores en orden lexicográfico de puntos de corte."""
    for idx, h in enumerate(thrackle_service.enumerate_spanning_thrackles(args.s, args.t)):
        if args.format == "json":
            print(exports.thrackle_json(h))
        elif args.format == "dot":
            print(exports.thrackle_dot(h, idx), end="")
        else:
            print(exports.intervals_line(h))
    return EXIT_OK


# ============================================================
# PHI
# ============================================================

def handle_phi(args) -> int:
    if args.invert is not None:
        h = thrackle_service.phi_inverse(args.invert, args.s, args.t)
        print(exports.intervals_line(h))
        return EXIT_OK

    seen = set()
    for h in thrackle_service.enumerate_spanning_thrackles(args.s, args.t):
        bits = str(thrackle_service.phi(h))
        seen.add(bits)
        print(f"{exports.intervals_line(h)}\t{bits}")
    if len(seen) != thrackle_service.count_closed_form(args.s, args.t):
        return fail("phi: la imagen no es inyectiva")
    return EXIT_OK


def register(subparsers) -> None:
    count = subparsers.add_parser("count", help="Cuenta thrackles generadores de K_{s,t}")
    add_sides_args(count)
    count.add_argument("--method", default="closed", help="closed,recurrence,enum,brute (lista separada por comas)")
    count.set_defaults(handler=handle_count)

    enum = subparsers.add_parser("enum", help="Enumera thrackles generadores")
    add_sides_args(enum)
    enum.add_argument("--format", choices=("intervals", "json", "dot"), default="intervals")
    enum.set_defaults(handler=handle_enum)

    phi = subparsers.add_parser("phi", help="Biyección con cadenas de bits")
    add_sides_args(phi)
    phi.add_argument("--invert", metavar="STRING", help="Cadena a invertir")
    phi.set_defaults(handler=handle_phi)


__all__ = ["register", "handle_count", "handle_enum", "handle_phi"]

# ============================================================
# handlers/algebra.py
# Comando groebner-check
# ============================================================

import logging

from thrackles import exports
from thrackles.services import groebner_service

from handlers import EXIT_OK, add_rank_args, fail

logger = logging.getLogger(__name__)


def handle_groebner_check(args) -> int:
    """Imprime C_g y certifica por Buchberger; `--corrupt` activa el control negativo."""
    basis = groebner_service.generate_cg(args.r, args.n)
    if args.corrupt is not None:
        basis = groebner_service.corrupt_basis(basis, args.corrupt)
        logger.warning(f"⚠️ Base corrompida en el índice {args.corrupt}")
    ok = groebner_service.buchberger_check(args.r, args.n, basis=basis, threads=args.threads)

    if args.format == "json":
        print(exports.groebner_record(args.r, args.n, basis, ok).model_dump_json(indent=2))
    else:
        for b in basis:
            print(groebner_service.render_binomial(b))
        print(f"binomials={len(basis)} groebner={'OK' if ok else 'FAIL'}")

    if not ok:
        return fail(f"groebner: C_g(r={args.r}, n={args.n}) no es base de Gröbner reducida")
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("groebner-check", help="Certifica C_g como base de Gröbner")
    add_rank_args(parser)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--corrupt", type=int, metavar="INDEX", help="Intercambia colas de los binomios INDEX e INDEX+1")
    parser.set_defaults(handler=handle_groebner_check)


__all__ = ["register", "handle_groebner_check"]

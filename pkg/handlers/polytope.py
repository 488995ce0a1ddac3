# ============================================================
# handlers/polytope.py
# Comandos triangulate / verify / ehrhart
# ============================================================

import logging

import settings
from thrackles import exports
from thrackles.services import lattice_service, triangulation_service

from handlers import EXIT_OK, add_rank_args, fail, non_negative_int

logger = logging.getLogger(__name__)


def _first_failure(summary) -> str:
    if summary.count != summary.expected:
        return f"count: {summary.count} símplices, se esperaban {summary.expected}"
    if summary.unimodular != f"{summary.count}/{summary.count}":
        return f"unimodular: {summary.unimodular}"
    if summary.volume_ok is False:
        return f"volume: Σ símplices / Ehrhart = {summary.volume}"
    return f"covering: exactamente uno / aceptadas = {summary.covering}"


# ============================================================
# TRIANGULATE
# ============================================================

def handle_triangulate(args) -> int:
    t = triangulation_service.build_triangulation(args.r, args.n)

    if args.format == "csv":
        summary = triangulation_service.summarize(args.r, args.n, samples=0, threads=args.threads)
        print(exports.summary_csv([summary]), end="")
        return EXIT_OK if summary.ok else fail(_first_failure(summary))

    volumes = triangulation_service.simplex_volumes(t, args.threads)
    if args.format == "json":
        print(exports.triangulation_record(t, volumes).model_dump_json(indent=2))
    else:
        for h, vol in zip(t.thrackles, volumes):
            edges = " ".join(f"({e.left},{e.right})" for e in h.sorted_edges)
            print(f"{edges}\tvolume={vol}")
        print(f"simplices={t.count} expected={triangulation_service.expected_count(args.r, args.n)}")
    return EXIT_OK


# ============================================================
# VERIFY
# ============================================================

def handle_verify(args) -> int:
    """Cardinalidad, unimodularidad, volumen frente a Ehrhart y cobertura."""
    summary = triangulation_service.summarize(
        args.r,
        args.n,
        samples=args.samples,
        seed=args.seed,
        threads=args.threads,
    )
    if args.format == "csv":
        print(exports.summary_csv([summary]), end="")
    elif args.format == "json":
        print(summary.model_dump_json(indent=2))
    else:
        print(exports.summary_text(summary))
    return EXIT_OK if summary.ok else fail(_first_failure(summary))


# ============================================================
# EHRHART
# ============================================================

def handle_ehrhart(args) -> int:
    poly = lattice_service.ehrhart_fit(args.r, args.n)
    kmax = args.kmax if args.kmax is not None else args.n + 1
    values = [
        (k, lattice_service.count_lattice_points_parallel(args.r, args.n, k, args.threads))
        for k in range(kmax + 1)
    ]

    if args.format == "csv":
        print(exports.ehrhart_csv(values), end="")
    elif args.format == "json":
        print(exports.ehrhart_record(poly, values).model_dump_json(indent=2))
    else:
        for k, count in values:
            print(f"k={k} count={count}")
        coefficients = " ".join(str(c) for c in poly.fractions)
        print(f"coefficients={coefficients}")
        print(f"normalized_volume={poly.normalized_volume}")

    mismatched = [k for k, count in values if poly.evaluate(k) != count]
    if mismatched:
        return fail(f"ehrhart: el polinomio no reproduce el conteo en k={mismatched[0]}")
    return EXIT_OK


def register(subparsers) -> None:
    tri = subparsers.add_parser("triangulate", help="Emite Δ_≻")
    add_rank_args(tri)
    tri.add_argument("--format", choices=("text", "json", "csv"), default="text")
    tri.set_defaults(handler=handle_triangulate)

    verify = subparsers.add_parser("verify", help="Certifica Δ_≻ por oráculos independientes")
    add_rank_args(verify)
    verify.add_argument("--samples", type=non_negative_int, default=settings.THRACKLES_SAMPLES)
    verify.add_argument("--seed", type=int, default=settings.THRACKLES_SEED)
    verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    verify.set_defaults(handler=handle_verify)

    ehr = subparsers.add_parser("ehrhart", help="Conteos de puntos y polinomio de Ehrhart")
    add_rank_args(ehr)
    ehr.add_argument("--kmax", type=non_negative_int, help="Última dilatación a contar (por defecto n+1)")
    ehr.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ehr.set_defaults(handler=handle_ehrhart)


__all__ = ["register", "handle_triangulate", "handle_verify", "handle_ehrhart"]

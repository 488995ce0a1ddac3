# ============================================================
# handlers/matroids.py
# Comando matroid: subgrafos tangentes y thrackles maximales
# ============================================================

import logging
from math import comb
from pathlib import Path

from thrackles import exports
from thrackles.services import matroid_service

from handlers import EXIT_OK, fail

logger = logging.getLogger(__name__)


def _parse_basis(text: str):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise ValueError(f"Base inválida '{text}': se esperan enteros separados por comas")


def handle_matroid(args) -> int:
    m = matroid_service.load_matroid(Path(args.input).read_text(encoding="utf-8"))
    basis = _parse_basis(args.basis) if args.basis else None
    reports = matroid_service.matroid_reports(m, basis=basis, threads=args.threads)

    if args.format == "json":
        print(exports.matroid_record(m, reports).model_dump_json(indent=2))
    else:
        for report in reports:
            print(exports.report_text(report))

    if args.all_relabelings:
        for report in reports:
            lo, hi = matroid_service.relabeling_spread(report.base, m)
            print(f"B={list(report.base)} relabelings min={lo} max={hi}")

    # U^{r,n}: todas las r-partes son bases y cada cono da C(n−2, r−1)
    if len(m.bases) == comb(m.n, m.r):
        wrong = [r for r in reports if r.count != r.uniform_bound]
        if wrong:
            return fail(f"matroid: base {list(wrong[0].base)} da {wrong[0].count} ≠ {wrong[0].uniform_bound}")
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("matroid", help="Conos tangentes de una matroide dada por bases")
    parser.add_argument("--input", required=True, metavar="FILE", help='JSON {"n": …, "r": …, "bases": [[…], …]}')
    parser.add_argument("--basis", metavar="B", help="Base concreta, p. ej. 1,3")
    parser.add_argument("--all-relabelings", action="store_true", help="Rango de conteos sobre todos los reetiquetados")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.set_defaults(handler=handle_matroid)


__all__ = ["register", "handle_matroid"]

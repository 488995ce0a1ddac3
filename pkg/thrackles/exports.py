# ============================================================
# thrackles/exports.py
# Emisores DOT / JSON / CSV (salida determinista)
# ============================================================

import csv
import io
import logging
from typing import Iterable, List, Sequence, Tuple

from thrackles.models.algebra import Binomial
from thrackles.models.matroid import MatroidBases, TangentConeReport
from thrackles.models.polytope import EhrhartPoly
from thrackles.models.records import (
    BinomialRecord,
    EhrhartRecord,
    GroebnerRecord,
    MatroidRecord,
    SimplexRecord,
    SummaryRecord,
    ThrackleRecord,
    TriangulationRecord,
)
from thrackles.models.thrackle import Thrackle
from thrackles.models.triangulation import Triangulation
from thrackles.services.embedding_service import to_dot
from thrackles.services.groebner_service import render_binomial
from thrackles.services.thrackle_service import thrackle_to_interval

logger = logging.getLogger(__name__)


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ============================================================
# THRACKLES
# ============================================================

def thrackle_record(h: Thrackle) -> ThrackleRecord:
    rep = thrackle_to_interval(h)
    return ThrackleRecord(
        s=h.graph.s,
        t=h.graph.t,
        edges=[e.key for e in h.sorted_edges],
        breakpoints=list(rep.breakpoints),
    )


def thrackle_json(h: Thrackle) -> str:
    """Una línea JSON por thrackle (formato de flujo de `enum`)."""
    return thrackle_record(h).model_dump_json()


def thrackle_dot(h: Thrackle, index: int = 0) -> str:
    return to_dot(h.graph, highlight=h.edges, name=f"H{index}")


def intervals_line(h: Thrackle) -> str:
    """
    Example:
        K_{2,3}, i_1=4 → "1:[3,4] 2:[4,5]"
    """
    rep = thrackle_to_interval(h)
    parts = []
    for k in range(1, rep.s + 1):
        lo, hi = rep.interval(k)
        parts.append(f"{k}:[{lo},{hi}]")
    return " ".join(parts)


# ============================================================
# TRIANGULACIÓN Y VERIFICACIÓN
# ============================================================

def triangulation_record(t: Triangulation, volumes: Sequence[int]) -> TriangulationRecord:
    return TriangulationRecord(
        r=t.r,
        n=t.n,
        count=t.count,
        simplices=[
            SimplexRecord(
                thrackle=[e.key for e in h.sorted_edges],
                vertices=[list(v.coords) for v in sx.vertices],
                volume=vol,
            )
            for h, sx, vol in zip(t.thrackles, t.simplices, volumes)
        ],
    )


SUMMARY_HEADER = ("r", "n", "count", "expected", "unimodular", "volume", "volume_ok", "covering", "ok")


def summary_row(s: SummaryRecord) -> Tuple:
    volume_ok = "" if s.volume_ok is None else str(s.volume_ok).lower()
    return s.r, s.n, s.count, s.expected, s.unimodular, s.volume, volume_ok, s.covering, str(s.ok).lower()


def summary_csv(summaries: Iterable[SummaryRecord]) -> str:
    return _csv(SUMMARY_HEADER, (summary_row(s) for s in summaries))


def summary_text(s: SummaryRecord) -> str:
    """
    Example:
        "r=2 n=5 count=3 expected=3 unimodular=3/3 volume=3/3 covering=100/100 ok=true"
    """
    return (
        f"r={s.r} n={s.n} count={s.count} expected={s.expected} "
        f"unimodular={s.unimodular} volume={s.volume} covering={s.covering} "
        f"ok={str(s.ok).lower()}"
    )


# ============================================================
# GRÖBNER
# ============================================================

def groebner_record(r: int, n: int, basis: Sequence[Binomial], is_groebner: bool) -> GroebnerRecord:
    return GroebnerRecord(
        r=r,
        n=n,
        is_groebner=is_groebner,
        binomials=[
            BinomialRecord(
                plus=[e.key for e in sorted(b.plus.support)],
                minus=[e.key for e in sorted(b.minus.support)],
                text=render_binomial(b),
            )
            for b in basis
        ],
    )


# ============================================================
# EHRHART
# ============================================================

def ehrhart_record(poly: EhrhartPoly, values: Sequence[Tuple[int, int]]) -> EhrhartRecord:
    return EhrhartRecord(
        r=poly.r,
        n=poly.n,
        values=list(values),
        coefficients=list(poly.coefficients),
        normalized_volume=poly.normalized_volume,
    )


def ehrhart_csv(values: Sequence[Tuple[int, int]]) -> str:
    return _csv(("k", "count"), values)


# ============================================================
# MATROIDES
# ============================================================

def matroid_record(m: MatroidBases, reports: List[TangentConeReport]) -> MatroidRecord:
    return MatroidRecord(n=m.n, r=m.r, reports=reports)


def report_text(report: TangentConeReport) -> str:
    edges = " ".join(f"({i},{j})" for i, j in report.edges) or "-"
    line = (
        f"B={list(report.base)} edges={edges} count={report.count} "
        f"sizes={list(report.sizes)} equal={str(report.equal_cardinality).lower()} "
        f"bound={report.uniform_bound}"
    )
    return f"{line} note={report.note}" if report.note else line


# ============================================================
# EXPORTACIONES PÚBLICAS
# ============================================================

__all__ = [
    "thrackle_record",
    "thrackle_json",
    "thrackle_dot",
    "intervals_line",
    "triangulation_record",
    "SUMMARY_HEADER",
    "summary_row",
    "summary_csv",
    "summary_text",
    "groebner_record",
    "ehrhart_record",
    "ehrhart_csv",
    "matroid_record",
    "report_text",
]

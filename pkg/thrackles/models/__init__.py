# ============================================================
# thrackles/models/__init__.py
# ============================================================

from thrackles.models.base import FrozenModel
from thrackles.models.graph import Edge, EmbeddedBipartite
from thrackles.models.thrackle import BitString, IntervalRep, SpanningThrackle, Thrackle
from thrackles.models.polytope import EhrhartPoly, LatticePoint, Simplex
from thrackles.models.algebra import Binomial, Monomial, TermOrder
from thrackles.models.triangulation import ConeDescription, Triangulation
from thrackles.models.matroid import MatroidBases, TangentConeReport, TangentSubgraph

__all__ = [
    "FrozenModel",
    "Edge",
    "EmbeddedBipartite",
    "Thrackle",
    "SpanningThrackle",
    "IntervalRep",
    "BitString",
    "LatticePoint",
    "Simplex",
    "EhrhartPoly",
    "TermOrder",
    "Monomial",
    "Binomial",
    "Triangulation",
    "ConeDescription",
    "MatroidBases",
    "TangentSubgraph",
    "TangentConeReport",
]

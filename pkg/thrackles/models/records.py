# ============================================================
# thrackles/models/records.py
# Contratos JSON de salida (uno por esquema en schemas/)
# ============================================================

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from thrackles.models.matroid import TangentConeReport


# --- THRACKLES ---

class ThrackleRecord(BaseModel):
    s: int = Field(..., description="Parte izquierda")
    t: int = Field(..., description="Parte derecha")
    edges: List[Tuple[int, int]]
    breakpoints: List[int]


# --- TRIANGULACIÓN ---

class SimplexRecord(BaseModel):
    thrackle: List[Tuple[int, int]]
    vertices: List[List[int]]
    volume: int


class TriangulationRecord(BaseModel):
    r: int
    n: int
    count: int
    simplices: List[SimplexRecord]


class SummaryRecord(BaseModel):
    r: int
    n: int
    count: int
    expected: int
    unimodular: str = Field(..., description="k/N símplices con volumen 1")
    volume_ok: Optional[bool] = Field(None, description="None si el oráculo de Ehrhart no aplica")
    volume: str = ""
    covering: str = ""
    ok: bool


# --- GRÖBNER ---

class BinomialRecord(BaseModel):
    plus: List[Tuple[int, int]]
    minus: List[Tuple[int, int]]
    initial: str = Field("plus", description="Término inicial marcado")
    text: str


class GroebnerRecord(BaseModel):
    r: int
    n: int
    is_groebner: bool
    binomials: List[BinomialRecord]


# --- EHRHART ---

class EhrhartRecord(BaseModel):
    r: int
    n: int
    values: List[Tuple[int, int]] = Field(..., description="Pares (k, i(P,k))")
    coefficients: List[Tuple[int, int]] = Field(..., description="(numerador, denominador) en grado ascendente")
    normalized_volume: int


# --- MATROIDES ---

class MatroidRecord(BaseModel):
    n: int
    r: int
    reports: List[TangentConeReport]


__all__ = [
    "ThrackleRecord",
    "SimplexRecord",
    "TriangulationRecord",
    "SummaryRecord",
    "BinomialRecord",
    "GroebnerRecord",
    "EhrhartRecord",
    "MatroidRecord",
]

# ============================================================
# thrackles/models/polytope.py
# Puntos de red, símplices y polinomios de Ehrhart exactos
# ============================================================

from fractions import Fraction
from math import factorial
from typing import List, Tuple

from pydantic import Field, model_validator

from thrackles.models.base import FrozenModel
from thrackles.utils import Rational, pairs_to_fractions


class LatticePoint(FrozenModel):
    """Vector entero de longitud n."""

    coords: Tuple[int, ...]

    @classmethod
    def of(cls, *coords: int) -> "LatticePoint":
        return cls(coords=tuple(coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __lt__(self, other: "LatticePoint") -> bool:
        return self.coords < other.coords


class Simplex(FrozenModel):
    """Lista de vértices; los máximos de Δ_≻ tienen n−1 vértices en B_{r,n}."""

    vertices: Tuple[LatticePoint, ...]

    @model_validator(mode="after")
    def _same_ambient(self) -> "Simplex":
        dims = {v.dim for v in self.vertices}
        if len(dims) > 1:
            raise ValueError(f"Vértices con dimensiones ambiente distintas: {sorted(dims)}")
        return self


class EhrhartPoly(FrozenModel):
    """
    Polinomio de Ehrhart i(P, k) con coeficientes racionales exactos.

    `coefficients` va en grado ascendente como pares (numerador, denominador).
    """

    r: int = Field(..., ge=1)
    n: int = Field(..., ge=2)
    coefficients: Tuple[Tuple[int, int], ...]

    @property
    def fractions(self) -> List[Fraction]:
        return pairs_to_fractions(self.coefficients)

    @property
    def degree(self) -> int:
        coeffs = self.fractions
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return len(coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.fractions[self.degree]

    @property
    def normalized_volume(self) -> Rational:
        """(coeficiente líder)·(n−2)!; entero para politopos enteros."""
        vol = self.leading_coefficient * factorial(self.n - 2) if self.degree == self.n - 2 else Fraction(0)
        return int(vol) if vol.denominator == 1 else vol

    def evaluate(self, k: int) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.fractions):
            total = total * k + c
        return total


__all__ = ["LatticePoint", "Simplex", "EhrhartPoly"]

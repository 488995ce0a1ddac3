# ============================================================
# thrackles/models/algebra.py
# Monomios y binomios sobre las variables x_{ij} (aristas de K_{r,n−r})
# ============================================================

from collections import Counter
from enum import Enum as PyEnum
from typing import Dict, FrozenSet, Iterable, Tuple

from pydantic import model_validator

from thrackles.models.base import FrozenModel
from thrackles.models.graph import Edge


class TermOrder(str, PyEnum):
    """Órdenes de términos soportados."""
    LEX = "lex"                 # Lex puro inducido por var_compare (principal)
    WEIGHT_LEX = "weight-lex"   # Pesos refinados por lex (solo verificación cruzada)


class Monomial(FrozenModel):
    """
    Monomio con soporte finito: pares (arista, exponente > 0) ordenados por arista.

    El monomio vacío es la constante 1.
    """

    exponents: Tuple[Tuple[Edge, int], ...] = ()

    @model_validator(mode="after")
    def _canonical(self) -> "Monomial":
        edges = [e for e, _ in self.exponents]
        if any(k <= 0 for _, k in self.exponents):
            raise ValueError("Los exponentes deben ser positivos")
        if len(set(edges)) != len(edges) or edges != sorted(edges):
            raise ValueError("Exponentes no canónicos: use Monomial.from_map / from_edges")
        return self

    @classmethod
    def from_map(cls, powers: Dict[Edge, int]) -> "Monomial":
        return cls(exponents=tuple(sorted((e, k) for e, k in powers.items() if k > 0)))

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "Monomial":
        """Producto de las variables de `edges` (con multiplicidad)."""
        return cls.from_map(Counter(edges))

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    @property
    def as_map(self) -> Dict[Edge, int]:
        return dict(self.exponents)

    @property
    def degree(self) -> int:
        return sum(k for _, k in self.exponents)

    @property
    def support(self) -> FrozenSet[Edge]:
        return frozenset(e for e, _ in self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(k == 1 for _, k in self.exponents)

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        parts = []
        for e, k in self.exponents:
            var = f"x[{e.left},{e.right}]"
            parts.append(var if k == 1 else f"{var}^{k}")
        return "*".join(parts)


class Binomial(FrozenModel):
    """
    plus − minus, coeficientes +1 / −1.

    En los elementos de C_g, `plus` es el término inicial marcado.
    """

    plus: Monomial
    minus: Monomial

    @model_validator(mode="after")
    def _distinct_terms(self) -> "Binomial":
        if self.plus == self.minus:
            raise ValueError(f"Binomio nulo: {self.plus} − {self.minus}")
        return self

    def __str__(self) -> str:
        return f"{self.plus} - {self.minus}"


__all__ = ["TermOrder", "Monomial", "Binomial"]

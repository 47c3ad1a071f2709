"""One-call computation of every invariant of a diagram for a data vector."""

from __future__ import annotations

from dataclasses import dataclass

from .config import DataVector, default_semantics
from .diagram import Diagram
from .paths import DEFAULT_BUDGET, PathPolynomial, PathSemantics, natural_path_polynomial
from .quiver import QuiverRep, build_quiver


@dataclass(frozen=True)
class Result:
    vector: str
    semantics: PathSemantics
    quiver: QuiverRep
    polynomial: PathPolynomial

    @property
    def count(self) -> int:
        return len(self.quiver.vertices)

    @property
    def rank_multiset(self) -> list[int]:
        return sorted(self.quiver.ranks)

    def to_json(self) -> dict:
        return {
            "vector": self.vector,
            "semantics": self.semantics.to_json(),
            "counting_invariant": self.count,
            "ranks": self.quiver.ranks,
            "polynomial": str(self.polynomial),
            "terms": self.polynomial.to_json(),
        }


def compute(D: Diagram, vector: DataVector, sem: PathSemantics | None = None,
            budget: int = DEFAULT_BUDGET) -> Result:
    sem = sem or default_semantics()
    Q = build_quiver(D, vector.X, vector.M, vector.S)
    return Result(vector.name, sem, Q, natural_path_polynomial(Q, sem, budget))

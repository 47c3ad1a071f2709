"""Biquandle coloring quivers weighted by bead-coloring modules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .beads import SolutionModule, build_bead_system, solve_system
from .biquandle import Biquandle, BiquandleMap, enumerate_endomorphisms, is_homomorphism
from .bqmodule import BiquandleModule
from .colorings import Coloring, coloring_image, enumerate_colorings
from .diagram import Diagram
from .errors import DataError

IDENTITY = "Identity"
ZERO = "Zero"


class Arrow(NamedTuple):
    src: int
    endo: int
    dst: int
    weight: str


@dataclass(frozen=True)
class QuiverRep:
    vertices: tuple[Coloring, ...]
    modules: tuple[SolutionModule, ...]
    arrows: tuple[Arrow, ...]
    endos: tuple[BiquandleMap, ...]

    @property
    def ranks(self) -> list[int]:
        return [mod.rank for mod in self.modules]

    def to_json(self) -> dict:
        return {
            "vertices": [
                {"colors": list(v.colors), "rank": mod.rank, "factors": list(mod.invariant_factors)}
                for v, mod in zip(self.vertices, self.modules)
            ],
            "endos": [list(e.image) for e in self.endos],
            "arrows": [a._asdict() for a in self.arrows],
        }

    def to_dot(self) -> str:
        lines = ["digraph quiver {"]
        for i, (v, mod) in enumerate(zip(self.vertices, self.modules)):
            label = "".join(map(str, v.colors)) if len(v.colors) <= 16 else str(i)
            lines.append(f'  v{i} [label="{label}\\nrank {mod.rank}"];')
        for a in self.arrows:
            style = "solid" if a.weight == IDENTITY else "dashed"
            lines.append(f'  v{a.src} -> v{a.dst} [label="σ{a.endo + 1}", style={style}];')
        lines.append("}")
        return "\n".join(lines)


def apply_endomorphism(c: Coloring, sigma: BiquandleMap) -> Coloring:
    return Coloring(c.diagram, tuple(sigma(x) for x in c.colors))


def arrow_weight(M: BiquandleModule, image, sigma: BiquandleMap) -> str:
    """Identity when t, s, r agree at (x, y) and (σx, σy) for all x, y in ``image``."""
    for x in image:
        for y in image:
            if M.coefficients(x, y) != M.coefficients(sigma(x), sigma(y)):
                return ZERO
    return IDENTITY


def build_quiver(D: Diagram, X: Biquandle, M: BiquandleModule,
                 S: Sequence[BiquandleMap] | None = None) -> QuiverRep:
    """Quiver representation of D for the data vector (X, M, Z_m, S).

    ``S`` defaults to the full endomorphism set of X.
    """
    if M.X != X:
        raise DataError("module is defined over a different biquandle")
    if S is None:
        S = enumerate_endomorphisms(X)
    for i, sigma in enumerate(S):
        if sigma.source != X or sigma.target != X or not is_homomorphism(X, X, sigma.image):
            raise DataError(f"map {i + 1} {list(sigma.image)} is not an endomorphism of X")
    vertices = enumerate_colorings(D, X)
    index = {v.colors: i for i, v in enumerate(vertices)}
    modules = tuple(solve_system(build_bead_system(v, M)) for v in vertices)
    arrows = []
    for i, v in enumerate(vertices):
        image = sorted(coloring_image(v, X))
        for j, sigma in enumerate(S):
            w = apply_endomorphism(v, sigma)
            arrows.append(Arrow(i, j, index[w.colors], arrow_weight(M, image, sigma)))
    return QuiverRep(tuple(vertices), modules, tuple(arrows), tuple(S))

"""Bead-coloring systems and their solution modules over Z_m."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .bqmodule import BiquandleModule
from .colorings import Coloring
from .diagram import ClassicalCrossing, MarkedVertex, VirtualNode
from .errors import DataError


@dataclass(frozen=True)
class BeadSystem:
    coloring: Coloring
    module: BiquandleModule
    matrix: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return self.module.m

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), self.coloring.diagram.semiarc_count


@dataclass(frozen=True)
class SolutionModule:
    m: int
    free_rank: int
    invariant_factors: tuple[int, ...] = field(default=())

    @property
    def rank(self) -> int:
        # for prime m this is the dimension; for composite m only Z_m summands count
        return self.free_rank

    @property
    def size(self) -> int:
        total = self.m ** self.free_rank
        for f in self.invariant_factors:
            total *= f
        return total

    def to_json(self) -> dict:
        return {"rank": self.rank, "factors": list(self.invariant_factors)}


def build_bead_system(c: Coloring, M: BiquandleModule) -> BeadSystem:
    """Linear relations on semiarc beads for the colored diagram ``c``.

    Rows come in node order: per crossing the under-out relation then the
    over-out relation, three equalities per marked vertex and two per
    virtual crossing.  Columns are semiarcs 1..k.
    """
    if max(c.colors, default=1) > M.X.n:
        raise DataError("coloring uses elements outside the module's biquandle")
    m = M.m
    k = c.diagram.semiarc_count
    rows = []

    def row(*terms):
        vec = [0] * k
        for coeff, lab in terms:
            vec[lab - 1] = (vec[lab - 1] + coeff) % m
        rows.append(tuple(vec))

    for nd in c.diagram.nodes:
        if isinstance(nd, ClassicalCrossing):
            t, s, r = M.coefficients(c[nd.a], c[nd.b])
            row((1, nd.c), (-t, nd.a), (-s, nd.b))
            row((1, nd.d), (-r, nd.b))
        elif isinstance(nd, MarkedVertex):
            for lab in (nd.b, nd.c, nd.d):
                row((1, nd.a), (-1, lab))
        elif isinstance(nd, VirtualNode):
            row((1, nd.c), (-1, nd.a))
            row((1, nd.d), (-1, nd.b))
    return BeadSystem(c, M, tuple(rows))


def row_reduce(matrix, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over the field Z_p and its pivot columns."""
    rows = [[v % p for v in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    top = 0
    for col in range(ncols):
        pivot = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        inv = pow(rows[top][col], -1, p)
        rows[top] = [v * inv % p for v in rows[top]]
        for i in range(len(rows)):
            if i != top and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[top])]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows, pivots


def _is_prime(m: int) -> bool:
    return m >= 2 and all(m % q for q in range(2, int(m ** 0.5) + 1))


def smith_diagonal(matrix) -> list[int]:
    """Nonzero invariant factors of an integer matrix."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    if not matrix or not matrix[0]:
        return []
    snf = smith_normal_form(Matrix(matrix), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    return [d for d in diag if d]


def solve_matrix(matrix, ncols: int, m: int) -> SolutionModule:
    """Solution module of the homogeneous system ``matrix · v = 0`` over Z_m."""
    if not matrix:
        return SolutionModule(m, ncols)
    if _is_prime(m):
        _, pivots = row_reduce(matrix, m)
        return SolutionModule(m, ncols - len(pivots))
    # over Z: A = U D V with unimodular U, V; solutions of D w = 0 mod m
    free = ncols
    factors = []
    for d in smith_diagonal([list(r) for r in matrix]):
        free -= 1
        g = gcd(d, m)
        if g == m:
            free += 1
        elif g > 1:
            factors.append(g)
    return SolutionModule(m, free, tuple(sorted(factors)))


def solve_system(sys: BeadSystem) -> SolutionModule:
    return solve_matrix(sys.matrix, sys.shape[1], sys.m)


def bead_rank(c: Coloring, M: BiquandleModule) -> int:
    return solve_system(build_bead_system(c, M)).rank

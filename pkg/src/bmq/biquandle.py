"""Finite biquandles given by operation tables.

Elements are the integers ``1..n``.  ``under[x-1][y-1]`` is ``x ⊳̲ y`` and
``over[x-1][y-1]`` is ``x ⊳̄ y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import DimensionError


class Violation(NamedTuple):
    axiom: str
    witness: tuple

    def __str__(self):
        return f"{self.axiom} at {self.witness}"


def _as_table(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _check_square(table, n, name, lo, hi):
    if len(table) != n or any(len(row) != n for row in table):
        raise DimensionError(f"{name} table is not {n}x{n}")
    for row in table:
        for v in row:
            if not lo <= v <= hi:
                raise DimensionError(f"{name} table entry {v} outside {lo}..{hi}")


def check_biquandle(under: Sequence[Sequence[int]], over: Sequence[Sequence[int]]) -> list[Violation]:
    """Return every violated axiom instance; an empty list means a biquandle.

    Axiom ids are ``"i"``, ``"ii-alpha"``, ``"ii-beta"``, ``"ii-S"`` and
    ``"iii-1"`` .. ``"iii-3"`` for the three exchange laws.
    """
    under = _as_table(under)
    over = _as_table(over)
    n = len(under)
    _check_square(under, n, "under", 1, n)
    _check_square(over, n, "over", 1, n)

    def u(x, y):
        return under[x - 1][y - 1]

    def o(x, y):
        return over[x - 1][y - 1]

    elems = range(1, n + 1)
    report = []
    for x in elems:
        if u(x, x) != o(x, x):
            report.append(Violation("i", (x,)))
    for y in elems:
        alpha = [o(x, y) for x in elems]
        beta = [u(x, y) for x in elems]
        if len(set(alpha)) != n:
            report.append(Violation("ii-alpha", (y,)))
        if len(set(beta)) != n:
            report.append(Violation("ii-beta", (y,)))
    seen = {}
    for x in elems:
        for y in elems:
            image = (o(y, x), u(x, y))
            if image in seen:
                report.append(Violation("ii-S", (seen[image], (x, y))))
            else:
                seen[image] = (x, y)
    for x in elems:
        for y in elems:
            for z in elems:
                if u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)):
                    report.append(Violation("iii-1", (x, y, z)))
                if o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)):
                    report.append(Violation("iii-2", (x, y, z)))
                if o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)):
                    report.append(Violation("iii-3", (x, y, z)))
    return report


@dataclass(frozen=True)
class Biquandle:
    under: tuple[tuple[int, ...], ...]
    over: tuple[tuple[int, ...], ...]
    # inverse of (x, y) -> (x ⊳̲ y, y ⊳̄ x), used to push colors backwards through crossings
    _back: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "under", _as_table(self.under))
        object.__setattr__(self, "over", _as_table(self.over))
        n = len(self.under)
        _check_square(self.under, n, "under", 1, n)
        _check_square(self.over, n, "over", 1, n)
        back = {}
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                back.setdefault((self.u(x, y), self.o(y, x)), (x, y))
        object.__setattr__(self, "_back", back)

    @classmethod
    def from_tables(cls, under, over, check=True) -> "Biquandle":
        if check:
            report = check_biquandle(under, over)
            if report:
                raise ValueError(f"not a biquandle: {report[0]} ({len(report)} violations)")
        return cls(under, over)

    @property
    def n(self) -> int:
        return len(self.under)

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def u(self, x: int, y: int) -> int:
        return self.under[x - 1][y - 1]

    def o(self, x: int, y: int) -> int:
        return self.over[x - 1][y - 1]

    def crossing_inputs(self, c: int, d: int):
        """Input colors (a, b) with a ⊳̲ b = c and b ⊳̄ a = d, or None."""
        return self._back.get((c, d))

    def restricted(self, subset) -> tuple[list[list[int]], list[list[int]]]:
        """Tables of the sub-structure on ``subset``, relabelled 1..len(subset)."""
        elems = sorted(subset)
        index = {x: i + 1 for i, x in enumerate(elems)}
        under = [[index.get(self.u(x, y), 0) for y in elems] for x in elems]
        over = [[index.get(self.o(x, y), 0) for y in elems] for x in elems]
        return under, over

    def to_json(self) -> dict:
        return {"n": self.n, "under": [list(r) for r in self.under], "over": [list(r) for r in self.over]}

    @classmethod
    def from_json(cls, data: dict) -> "Biquandle":
        X = cls.from_tables(data["under"], data["over"])
        if "n" in data and data["n"] != X.n:
            raise DimensionError(f"declared n={data['n']} but tables are {X.n}x{X.n}")
        return X


@dataclass(frozen=True)
class BiquandleMap:
    source: Biquandle
    target: Biquandle
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def compose(self, other: "BiquandleMap") -> "BiquandleMap":
        """``self ∘ other``: apply ``other`` first."""
        return BiquandleMap(other.source, self.target, tuple(self(other(x)) for x in other.source.elements))

    @property
    def is_identity(self) -> bool:
        return self.source == self.target and self.image == tuple(self.source.elements)


def is_homomorphism(X: Biquandle, Y: Biquandle, f: Sequence[int]) -> bool:
    if len(f) != X.n or any(not 1 <= v <= Y.n for v in f):
        return False
    for x in X.elements:
        fx = f[x - 1]
        for y in X.elements:
            fy = f[y - 1]
            if f[X.u(x, y) - 1] != Y.u(fx, fy) or f[X.o(x, y) - 1] != Y.o(fx, fy):
                return False
    return True


def enumerate_endomorphisms(X: Biquandle) -> list[BiquandleMap]:
    """All endomorphisms of ``X``, ordered lexicographically by image array.

    Backtracks over images of 1, 2, ..., n; an equation is checked as soon
    as x, y and both products are assigned.
    """
    n = X.n
    image = [0] * (n + 1)
    found = []

    def consistent(k):
        # every equation whose largest involved element is k
        for x in range(1, k + 1):
            for y in range(1, k + 1):
                if x != k and y != k and X.u(x, y) != k and X.o(x, y) != k:
                    continue
                xu, xo = X.u(x, y), X.o(x, y)
                if xu <= k and image[xu] != X.u(image[x], image[y]):
                    return False
                if xo <= k and image[xo] != X.o(image[x], image[y]):
                    return False
        return True

    def extend(k):
        if k > n:
            found.append(BiquandleMap(X, X, tuple(image[1:])))
            return
        for v in X.elements:
            image[k] = v
            if consistent(k):
                extend(k + 1)
        image[k] = 0

    extend(1)
    return found


def image_closure(X: Biquandle, seed) -> frozenset[int]:
    """Smallest superset of ``seed`` closed under both operations."""
    closed = set(seed)
    frontier = list(closed)
    while frontier:
        fresh = []
        for x in frontier:
            for y in list(closed):
                for z in (X.u(x, y), X.u(y, x), X.o(x, y), X.o(y, x)):
                    if z not in closed:
                        closed.add(z)
                        fresh.append(z)
        frontier = fresh
    return frozenset(closed)


def constant_action(perm: Sequence[int]) -> Biquandle:
    """Constant action biquandle x ⊳̲ y = x ⊳̄ y = perm(x)."""
    n = len(perm)
    table = [[perm[x] for _ in range(n)] for x in range(n)]
    return Biquandle(table, table)

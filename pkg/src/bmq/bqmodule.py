"""Biquandle modules over Z_m.

A module is three coefficient tables ``t``, ``s``, ``r`` indexed by pairs of
biquandle elements (1-based positions) with residues ``0..m-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .biquandle import Biquandle, Violation
from .errors import DimensionError


@dataclass(frozen=True)
class RingZm:
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("modulus must be at least 2")

    def is_unit(self, u: int) -> bool:
        return gcd(u % self.m, self.m) == 1

    @property
    def units(self) -> list[int]:
        return [u for u in range(self.m) if self.is_unit(u)]

    @property
    def is_field(self) -> bool:
        return len(self.units) == self.m - 1


def _table(rows, n, m, name):
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise DimensionError(f"{name} table is not {n}x{n}")
    if any(not 0 <= v < m for row in rows for v in row):
        raise DimensionError(f"{name} table has entries outside 0..{m - 1}")
    return rows


def _equations(X: Biquandle, t, s, r, m):
    """Yield (index, (x, y, z), lhs, rhs) for the six module equations."""
    u, o = X.u, X.o

    def T(a, b):
        return t[a - 1][b - 1]

    def S(a, b):
        return s[a - 1][b - 1]

    def R(a, b):
        return r[a - 1][b - 1]

    for x in X.elements:
        for y in X.elements:
            for z in X.elements:
                w = (x, y, z)
                yield 1, w, R(o(y, x), o(z, x)) * R(x, z), R(u(x, y), o(z, y)) * R(y, z)
                yield 2, w, R(u(x, z), u(y, z)) * T(y, z), T(o(y, x), o(z, x)) * R(x, y)
                yield 3, w, R(u(x, z), u(y, z)) * S(y, z), S(o(y, x), o(z, x)) * R(x, z)
                yield 4, w, T(u(x, z), u(y, z)) * T(x, z), T(u(x, y), o(z, y)) * T(x, y)
                yield 5, w, S(u(x, z), u(y, z)) * T(y, z), T(u(x, y), o(z, y)) * S(x, y)
                yield (6, w,
                       T(u(x, z), u(y, z)) * S(x, z) + S(u(x, z), u(y, z)) * S(y, z),
                       S(u(x, y), o(z, y)) * R(y, z))


def check_module(X: Biquandle, ring: RingZm, t, s, r) -> list[Violation]:
    """Every violated module condition; empty iff (t, s, r) is an X-module.

    Violations are tagged ``"diagonal"``, ``"unit-t"``, ``"unit-r"`` or
    ``"eq1"`` .. ``"eq6"``.
    """
    m = ring.m
    n = X.n
    t = _table(t, n, m, "t")
    s = _table(s, n, m, "s")
    r = _table(r, n, m, "r")
    report = []
    for x in X.elements:
        if (t[x - 1][x - 1] + s[x - 1][x - 1] - r[x - 1][x - 1]) % m:
            report.append(Violation("diagonal", (x,)))
    for x in X.elements:
        for y in X.elements:
            if not ring.is_unit(t[x - 1][y - 1]):
                report.append(Violation("unit-t", (x, y)))
            if not ring.is_unit(r[x - 1][y - 1]):
                report.append(Violation("unit-r", (x, y)))
    for index, witness, lhs, rhs in _equations(X, t, s, r, m):
        if (lhs - rhs) % m:
            report.append(Violation(f"eq{index}", witness))
    return report


@dataclass(frozen=True)
class BiquandleModule:
    X: Biquandle
    ring: RingZm
    t: tuple[tuple[int, ...], ...]
    s: tuple[tuple[int, ...], ...]
    r: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, m = self.X.n, self.ring.m
        object.__setattr__(self, "t", _table(self.t, n, m, "t"))
        object.__setattr__(self, "s", _table(self.s, n, m, "s"))
        object.__setattr__(self, "r", _table(self.r, n, m, "r"))

    @classmethod
    def from_tables(cls, X, m, t, s, r, check=True) -> "BiquandleModule":
        ring = m if isinstance(m, RingZm) else RingZm(m)
        if check:
            report = check_module(X, ring, t, s, r)
            if report:
                raise ValueError(f"not a biquandle module: {report[0]} ({len(report)} violations)")
        return cls(X, ring, t, s, r)

    @property
    def m(self) -> int:
        return self.ring.m

    def coefficients(self, x: int, y: int) -> tuple[int, int, int]:
        return self.t[x - 1][y - 1], self.s[x - 1][y - 1], self.r[x - 1][y - 1]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "t": [list(row) for row in self.t],
            "s": [list(row) for row in self.s],
            "r": [list(row) for row in self.r],
        }

    @classmethod
    def from_json(cls, X: Biquandle, data: dict, check=True) -> "BiquandleModule":
        return cls.from_tables(X, data["m"], data["t"], data["s"], data["r"], check=check)


def _constraint_plan(X: Biquandle):
    """Group every module condition by the last variable it reads.

    Variables are numbered t entries first, then s, then r, row-major.  Each
    condition is a pair of sides; a side is a list of products and a product
    is a tuple of variable ids.
    """
    n = X.n
    u, o = X.u, X.o

    def tv(a, b):
        return (a - 1) * n + (b - 1)

    def sv(a, b):
        return n * n + tv(a, b)

    def rv(a, b):
        return 2 * n * n + tv(a, b)

    plan = [[] for _ in range(3 * n * n)]
    seen = set()

    def add(lhs, rhs):
        # lhs/rhs: lists of products, each product a tuple of variable ids
        key = (tuple(sorted(lhs)), tuple(sorted(rhs)))
        if key in seen:
            return
        seen.add(key)
        last = max(v for prod in lhs + rhs for v in prod)
        plan[last].append((lhs, rhs))

    for x in X.elements:
        add([(tv(x, x),), (sv(x, x),)], [(rv(x, x),)])
    for x in X.elements:
        for y in X.elements:
            for z in X.elements:
                add([(rv(o(y, x), o(z, x)), rv(x, z))], [(rv(u(x, y), o(z, y)), rv(y, z))])
                add([(rv(u(x, z), u(y, z)), tv(y, z))], [(tv(o(y, x), o(z, x)), rv(x, y))])
                add([(rv(u(x, z), u(y, z)), sv(y, z))], [(sv(o(y, x), o(z, x)), rv(x, z))])
                add([(tv(u(x, z), u(y, z)), tv(x, z))], [(tv(u(x, y), o(z, y)), tv(x, y))])
                add([(sv(u(x, z), u(y, z)), tv(y, z))], [(tv(u(x, y), o(z, y)), sv(x, y))])
                add([(tv(u(x, z), u(y, z)), sv(x, z)), (sv(u(x, z), u(y, z)), sv(y, z))],
                    [(sv(u(x, y), o(z, y)), rv(y, z))])
    return plan


def _evaluate(side, values, m):
    total = 0
    for prod in side:
        term = 1
        for v in prod:
            term *= values[v]
        total += term
    return total % m


def search_modules(X: Biquandle, ring: RingZm, limit: int | None = None) -> list[BiquandleModule]:
    """Up to ``limit`` X-modules over ``ring`` in lexicographic order of (t, s, r).

    Exhaustive backtracking; with ``limit=None`` the result is complete.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be at least 1")
    n, m = X.n, ring.m
    size = n * n
    plan = _constraint_plan(X)
    units = ring.units
    domains = [units] * size + [list(range(m))] * size + [units] * size
    values = [0] * (3 * size)
    found = []

    def rows(offset):
        return [values[offset + i * n: offset + (i + 1) * n] for i in range(n)]

    def extend(k):
        if k == 3 * size:
            found.append(BiquandleModule(X, ring, rows(0), rows(size), rows(2 * size)))
            return limit is not None and len(found) >= limit
        for value in domains[k]:
            values[k] = value
            if all(_evaluate(lhs, values, m) == _evaluate(rhs, values, m) for lhs, rhs in plan[k]):
                if extend(k + 1):
                    return True
        return False

    extend(0)
    return found


"""Maximal identity-arrow paths and the natural path polynomial."""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass

from .errors import BMQError, BudgetExceeded
from .quiver import IDENTITY, Arrow, QuiverRep

REPETITIONS = ("arrow-simple", "vertex-simple")
MAXIMALITIES = ("non-extendable", "component-longest", "globally-longest")
RANK_VERTICES = ("path-constant", "start-vertex")

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class PathSemantics:
    repetition: str = "arrow-simple"
    maximality: str = "component-longest"
    rank_vertex: str = "path-constant"

    def __post_init__(self):
        if self.repetition not in REPETITIONS:
            raise ValueError(f"repetition must be one of {REPETITIONS}")
        if self.maximality not in MAXIMALITIES:
            raise ValueError(f"maximality must be one of {MAXIMALITIES}")
        if self.rank_vertex not in RANK_VERTICES:
            raise ValueError(f"rank_vertex must be one of {RANK_VERTICES}")

    @classmethod
    def parse(cls, text: str) -> "PathSemantics":
        """From ``"repetition,maximality,rank_vertex"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError("semantics must be 'repetition,maximality,rank_vertex'")
        return cls(*parts)

    def __str__(self):
        return f"{self.repetition},{self.maximality},{self.rank_vertex}"

    def to_json(self) -> dict:
        return {"repetition": self.repetition, "maximality": self.maximality, "rank_vertex": self.rank_vertex}


class Digraph:
    """Vertices 0..n-1 with a list of arrows (src, dst) that may repeat or loop."""

    def __init__(self, n: int, arrows):
        self.n = n
        self.arrows = [tuple(a) for a in arrows]
        self.out = defaultdict(list)
        self.inc = defaultdict(list)
        for i, (src, dst) in enumerate(self.arrows):
            self.out[src].append(i)
            self.inc[dst].append(i)

    def components(self) -> list[int]:
        """Weak component id of each vertex."""
        comp = list(range(self.n))

        def find(x):
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        for src, dst in self.arrows:
            a, b = find(src), find(dst)
            if a != b:
                comp[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]


def identity_subgraph(Q: QuiverRep) -> tuple[Digraph, list[Arrow]]:
    """The Identity-weighted arrows of Q, as a digraph on all vertices."""
    kept = [a for a in Q.arrows if a.weight == IDENTITY]
    return Digraph(len(Q.vertices), [(a.src, a.dst) for a in kept]), kept


class Path(tuple):
    """A path as a tuple of arrow ids; ``start`` is set for length-0 paths."""

    start: int

    def __new__(cls, arrows, start):
        obj = super().__new__(cls, arrows)
        obj.start = start
        return obj


def _trails(G: Digraph, budget: int):
    """Trails that cannot be continued at the head, from every start arrow."""
    used = [False] * len(G.arrows)
    seq = []
    steps = 0

    def walk(head):
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"path enumeration exceeded budget of {budget} steps")
        extended = False
        for i in G.out[head]:
            if not used[i]:
                extended = True
                used[i] = True
                seq.append(i)
                yield from walk(G.arrows[i][1])
                seq.pop()
                used[i] = False
        if not extended:
            yield tuple(seq), used

    for i, (src, dst) in enumerate(G.arrows):
        used[i] = True
        seq.append(i)
        yield from walk(dst)
        seq.pop()
        used[i] = False


def _vertex_paths(G: Digraph, budget: int):
    """Paths with pairwise distinct vertices that cannot be continued at the head."""
    seen = set()
    seq = []
    steps = 0

    def walk(head):
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"path enumeration exceeded budget of {budget} steps")
        extended = False
        for i in G.out[head]:
            nxt = G.arrows[i][1]
            if nxt not in seen:
                extended = True
                seen.add(nxt)
                seq.append(i)
                yield from walk(nxt)
                seq.pop()
                seen.discard(nxt)
        if not extended:
            yield tuple(seq), seen

    for i, (src, dst) in enumerate(G.arrows):
        if src == dst:
            continue
        seen.update((src, dst))
        seq.append(i)
        yield from walk(dst)
        seq.pop()
        seen.clear()


def enumerate_maximal_paths(G: Digraph, sem: PathSemantics = PathSemantics(),
                            budget: int = DEFAULT_BUDGET) -> list[Path]:
    """Maximal paths of G under ``sem``, each a tuple of arrow ids.

    Vertices with no usable arrow give a single length-0 path.
    """
    candidates = []
    if sem.repetition == "arrow-simple":
        for seq, used in _trails(G, budget):
            tail = G.arrows[seq[0]][0]
            if all(used[i] for i in G.inc[tail]):
                candidates.append(Path(seq, tail))
        covered = {v for a in G.arrows for v in a}
    else:
        for seq, seen in _vertex_paths(G, budget):
            tail = G.arrows[seq[0]][0]
            if all(G.arrows[i][0] in seen for i in G.inc[tail]):
                candidates.append(Path(seq, tail))
        covered = {v for a in G.arrows if a[0] != a[1] for v in a}
    candidates.extend(Path((), v) for v in range(G.n) if v not in covered)

    if sem.maximality == "globally-longest":
        top = max((len(p) for p in candidates), default=0)
        candidates = [p for p in candidates if len(p) == top]
    elif sem.maximality == "component-longest":
        comp = G.components()
        top = Counter()
        for p in candidates:
            top[comp[p.start]] = max(top[comp[p.start]], len(p))
        candidates = [p for p in candidates if len(p) == top[comp[p.start]]]
    return candidates


class PathPolynomial:
    """Polynomial in x, y with positive integer coefficients."""

    def __init__(self, terms=None):
        self.terms = Counter()
        for key, coeff in dict(terms or {}).items():
            if coeff:
                self.terms[tuple(key)] += coeff

    def __eq__(self, other):
        if isinstance(other, str):
            other = parse_polynomial(other)
        return isinstance(other, PathPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"PathPolynomial({self})"

    def __call__(self, x: int = 1, y: int = 1) -> int:
        return sum(c * x ** a * y ** b for (a, b), c in self.terms.items())

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return sorted(((a, b, c) for (a, b), c in self.terms.items()), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(_monomial(c, a, b) for a, b, c in self.sorted_terms())

    def to_latex(self) -> str:
        return re.sub(r"\^(\d{2,})", r"^{\1}", str(self))

    def to_json(self) -> list[dict]:
        return [{"coefficient": c, "x": a, "y": b} for a, b, c in self.sorted_terms()]


def _power(var, e):
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _monomial(c, a, b):
    body = _power("x", a) + _power("y", b)
    if not body:
        return str(c)
    return body if c == 1 else f"{c}{body}"


_TERM = re.compile(r"^(\d*)(?:x(?:\^(\d+))?)?(?:y(?:\^(\d+))?)?$")


def parse_polynomial(text: str) -> PathPolynomial:
    """Inverse of ``str(PathPolynomial)``; accepts any term order and spacing."""
    terms = Counter()
    text = text.replace(" ", "")
    if text == "0":
        return PathPolynomial()
    for part in text.split("+"):
        match = _TERM.match(part)
        if not part or not match:
            raise ValueError(f"bad polynomial term {part!r}")
        coeff, xe, ye = match.groups()
        a = int(xe) if xe else (1 if "x" in part else 0)
        b = int(ye) if ye else (1 if "y" in part else 0)
        terms[(a, b)] += int(coeff) if coeff else 1
    return PathPolynomial(terms)


class RankMismatch(BMQError):
    """Ranks differ along an identity path; the quiver is inconsistent."""


def natural_path_polynomial(Q: QuiverRep, sem: PathSemantics | None = None,
                            budget: int = DEFAULT_BUDGET) -> PathPolynomial:
    """Sum of x^rank y^length over the maximal identity paths of Q."""
    if sem is None:
        from .config import default_semantics

        sem = default_semantics()
    G, _ = identity_subgraph(Q)
    ranks = Q.ranks
    terms = Counter()
    for path in enumerate_maximal_paths(G, sem, budget):
        visited = [path.start] + [G.arrows[i][1] for i in path]
        if sem.rank_vertex == "path-constant":
            values = {ranks[v] for v in visited}
            if len(values) != 1:
                raise RankMismatch(f"ranks {sorted(values)} along identity path {list(path)}")
        terms[(ranks[path.start], len(path))] += 1
    return PathPolynomial(terms)

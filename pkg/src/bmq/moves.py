"""Reidemeister-type insertions on diagram codes for invariance testing.

Edits act on the Gauss-level structure: a semiarc is cut and new nodes are
spliced in.  R1 adds a kink, R2 pokes one strand over another with two
opposite crossings, V2 adds two virtual crossings between two strands.
Between arbitrary semiarcs R2 and V2 are virtual moves (the detour to bring
the strands together is virtual), so every edit preserves the virtual link
or virtual marked graph class and hence every invariant computed here.

New labels are appended after the existing ones, so results stay
contiguously labelled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import (ClassicalCrossing, Diagram, FreeLoop, MarkedVertex, VirtualNode,
                      parse_records, validate)
from .errors import DiagramError


@dataclass(frozen=True)
class MoveEdit:
    kind: str  # "R1", "R2" or "V2"
    location: tuple[int, ...]
    sign: int = 1
    variant: bool = False  # R1: over strand first; R2: antiparallel strands

    def apply(self, D: Diagram) -> Diagram:
        if self.kind == "R1":
            return r1_insert(D, self.location[0], self.sign, self.variant)
        if self.kind == "R2":
            return r2_insert(D, *self.location, sign=self.sign, antiparallel=self.variant)
        if self.kind == "V2":
            return v2_insert(D, *self.location)
        raise ValueError(f"unknown move {self.kind!r}")

    def __str__(self):
        where = ",".join(map(str, self.location))
        return f"{self.kind}[{where}] sign={self.sign:+d} variant={int(self.variant)}"


class _Records:
    """Mutable (text, inputs, outputs) view of a diagram's nodes."""

    def __init__(self, D: Diagram):
        unknown = validate(D)
        if unknown:
            raise DiagramError(unknown)
        self.rows = []
        for nd in D.nodes:
            if isinstance(nd, ClassicalCrossing):
                kind = "C+" if nd.sign > 0 else "C-"
            elif isinstance(nd, VirtualNode):
                kind = "V"
            elif isinstance(nd, MarkedVertex):
                kind = "M"
            else:
                kind = "O"
            self.rows.append([kind, list(nd.inputs), list(nd.outputs)])
        self.top = max(D.labels)

    def new_label(self) -> int:
        self.top += 1
        return self.top

    def check(self, s: int):
        if not 1 <= s <= self.top:
            raise DiagramError([f"unknown semiarc {s}"])

    def redirect_head(self, s: int, new: int):
        """The node where semiarc ``s`` ends now receives ``new`` instead."""
        for row in self.rows:
            if row[0] != "O" and s in row[1]:
                row[1][row[1].index(s)] = new
                return
        raise DiagramError([f"semiarc {s} has no head"])

    def free_loop(self, s: int):
        for row in self.rows:
            if row[0] == "O" and row[1] == [s]:
                return row
        return None

    def add(self, kind, ins, outs):
        self.rows.append([kind, list(ins), list(outs)])

    def diagram(self) -> Diagram:
        text = []
        for kind, ins, outs in self.rows:
            if kind == "O":
                text.append(f"O[{ins[0]}]")
            else:
                text.append(f"{kind}[{ins[0]},{ins[1]},{outs[0]},{outs[1]}]")
        return parse_records(" ".join(text))

    def cut(self, s: int) -> int:
        """Free the head of ``s``; returns the label that must now end there."""
        loop = self.free_loop(s)
        if loop is not None:
            self.rows.remove(loop)
            return s
        tail = self.new_label()
        self.redirect_head(s, tail)
        return tail


def r1_insert(D: Diagram, s: int, sign: int = 1, over_first: bool = False) -> Diagram:
    """Add a kink of the given sign on semiarc ``s``.

    The strand enters the new crossing along ``s``, runs around the loop and
    leaves along a new semiarc; ``over_first`` chooses whether the first
    passage is the over strand.
    """
    rec = _Records(D)
    rec.check(s)
    loop = rec.new_label()
    out = rec.cut(s)
    kind = "C+" if sign > 0 else "C-"
    if over_first:
        rec.add(kind, (loop, s), (out, loop))
    else:
        rec.add(kind, (s, loop), (loop, out))
    return rec.diagram()


def r2_insert(D: Diagram, s1: int, s2: int, sign: int = 1, antiparallel: bool = False) -> Diagram:
    """Pass the strand of ``s1`` over the strand of ``s2`` twice."""
    if s1 == s2:
        raise DiagramError(["R2 needs two different semiarcs"])
    rec = _Records(D)
    rec.check(s1)
    rec.check(s2)
    a_mid, b_mid = rec.new_label(), rec.new_label()
    a_out = rec.cut(s1)
    b_out = rec.cut(s2)
    first, second = ("C+", "C-") if sign > 0 else ("C-", "C+")
    if antiparallel:
        # the under strand meets the second crossing first
        rec.add(first, (b_mid, s1), (b_out, a_mid))
        rec.add(second, (s2, a_mid), (b_mid, a_out))
    else:
        rec.add(first, (s2, s1), (b_mid, a_mid))
        rec.add(second, (b_mid, a_mid), (b_out, a_out))
    return rec.diagram()


def v2_insert(D: Diagram, s1: int, s2: int) -> Diagram:
    """Cross the strands of ``s1`` and ``s2`` virtually twice."""
    if s1 == s2:
        raise DiagramError(["V2 needs two different semiarcs"])
    rec = _Records(D)
    rec.check(s1)
    rec.check(s2)
    a_mid, b_mid = rec.new_label(), rec.new_label()
    a_out = rec.cut(s1)
    b_out = rec.cut(s2)
    rec.add("V", (s1, s2), (a_mid, b_mid))
    rec.add("V", (a_mid, b_mid), (a_out, b_out))
    return rec.diagram()


def random_edit(D: Diagram, rng: random.Random, kinds=("R1", "R2", "V2")) -> MoveEdit:
    n = D.semiarc_count
    kinds = [k for k in kinds if k == "R1" or n >= 2]
    kind = rng.choice(kinds)
    sign = rng.choice((1, -1))
    variant = rng.random() < 0.5
    if kind == "R1":
        return MoveEdit("R1", (rng.randint(1, n),), sign, variant)
    s1, s2 = rng.sample(range(1, n + 1), 2)
    return MoveEdit(kind, (s1, s2), sign, variant)


def random_edits(D: Diagram, count: int, rng: random.Random,
                 kinds=("R1", "R2", "V2")) -> tuple[Diagram, list[MoveEdit]]:
    """Apply ``count`` random edits; returns the result and the edit list."""
    edits = []
    for _ in range(count):
        edit = random_edit(D, rng, kinds)
        D = edit.apply(D)
        edits.append(edit)
    return D, edits

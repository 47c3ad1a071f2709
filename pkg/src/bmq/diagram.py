"""Text codec for link, virtual link and marked graph diagrams.

A diagram is a whitespace-separated list of records::

    C+[a,b,c,d]   positive classical crossing
    C-[a,b,c,d]   negative classical crossing
    V[a,b,c,d]    virtual crossing, strands a->c and b->d
    M[a,b,c,d]    marked vertex, a and b incoming, c and d outgoing
    O[k]          crossingless closed component carrying semiarc k

For both crossing signs the fields are (under-in, over-in, under-out,
over-out).  ``#`` starts a comment running to the end of the line.

Internally a crossing is stored in the sideways normal form (x, y, z, w)
with ``z = x ⊳̲ y`` and ``w = y ⊳̄ x``, read left to right across the
crossing with the over strand vertical:

    positive  (x, y, z, w) = (under-in, over-out, under-out, over-in)
    negative  (x, y, z, w) = (under-out, over-in, under-in, over-out)
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import DiagramError, DiagramSyntaxError


@dataclass(frozen=True)
class ClassicalCrossing:
    a: int
    b: int
    c: int
    d: int
    sign: int = 1

    # fields are the sideways normal form; inputs/outputs follow orientation
    @property
    def inputs(self):
        return (self.a, self.d) if self.sign > 0 else (self.c, self.b)

    @property
    def outputs(self):
        return (self.c, self.b) if self.sign > 0 else (self.a, self.d)

    @property
    def labels(self):
        return (self.a, self.b, self.c, self.d)

    def relabel(self, f):
        return ClassicalCrossing(f(self.a), f(self.b), f(self.c), f(self.d), self.sign)

    def to_text(self):
        ui, oi = self.inputs
        uo, oo = self.outputs
        return f"C{'+' if self.sign > 0 else '-'}[{ui},{oi},{uo},{oo}]"


@dataclass(frozen=True)
class VirtualNode:
    a: int
    b: int
    c: int
    d: int

    inputs = property(lambda self: (self.a, self.b))
    outputs = property(lambda self: (self.c, self.d))
    labels = property(lambda self: (self.a, self.b, self.c, self.d))

    def relabel(self, f):
        return VirtualNode(f(self.a), f(self.b), f(self.c), f(self.d))

    def to_text(self):
        return f"V[{self.a},{self.b},{self.c},{self.d}]"


@dataclass(frozen=True)
class MarkedVertex:
    a: int
    b: int
    c: int
    d: int

    inputs = property(lambda self: (self.a, self.b))
    outputs = property(lambda self: (self.c, self.d))
    labels = property(lambda self: (self.a, self.b, self.c, self.d))

    def relabel(self, f):
        return MarkedVertex(f(self.a), f(self.b), f(self.c), f(self.d))

    def to_text(self):
        return f"M[{self.a},{self.b},{self.c},{self.d}]"


@dataclass(frozen=True)
class FreeLoop:
    k: int

    inputs = property(lambda self: (self.k,))
    outputs = property(lambda self: (self.k,))
    labels = property(lambda self: (self.k,))

    def relabel(self, f):
        return FreeLoop(f(self.k))

    def to_text(self):
        return f"O[{self.k}]"


Node = Union[ClassicalCrossing, VirtualNode, MarkedVertex, FreeLoop]


class DiagramViolation(NamedTuple):
    kind: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class Diagram:
    nodes: tuple

    @property
    def crossings(self) -> list[ClassicalCrossing]:
        return [nd for nd in self.nodes if isinstance(nd, ClassicalCrossing)]

    @property
    def virtuals(self) -> list[VirtualNode]:
        return [nd for nd in self.nodes if isinstance(nd, VirtualNode)]

    @property
    def marked(self) -> list[MarkedVertex]:
        return [nd for nd in self.nodes if isinstance(nd, MarkedVertex)]

    @property
    def loops(self) -> list[FreeLoop]:
        return [nd for nd in self.nodes if isinstance(nd, FreeLoop)]

    @property
    def labels(self) -> set[int]:
        return {lab for nd in self.nodes for lab in nd.labels}

    @property
    def semiarc_count(self) -> int:
        return len(self.labels)

    @property
    def component_count(self) -> int:
        parent = {lab: lab for lab in self.labels}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def join(x, y):
            parent[find(x)] = find(y)

        for nd in self.nodes:
            if isinstance(nd, MarkedVertex):
                for lab in nd.labels[1:]:
                    join(nd.a, lab)
            elif not isinstance(nd, FreeLoop):
                join(nd.a, nd.c)
                join(nd.b, nd.d)
        return len({find(lab) for lab in parent})

    def relabel(self, mapping) -> "Diagram":
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        return Diagram(tuple(nd.relabel(f) for nd in self.nodes))

    def normalized(self) -> "Diagram":
        """Labels renumbered to 1..k keeping their relative order."""
        index = {lab: i + 1 for i, lab in enumerate(sorted(self.labels))}
        return self.relabel(index)

    def to_text(self) -> str:
        return " ".join(nd.to_text() for nd in self.nodes)

    def __str__(self):
        return self.to_text()


def validate(diagram: Diagram) -> list[DiagramViolation]:
    """Structural problems with ``diagram``; empty list iff it is well formed."""
    report = []
    if not diagram.nodes:
        report.append(DiagramViolation("empty", "diagram has no records"))
        return report
    ins = Counter(lab for nd in diagram.nodes for lab in nd.inputs)
    outs = Counter(lab for nd in diagram.nodes for lab in nd.outputs)
    uses = Counter(lab for nd in diagram.nodes for lab in nd.labels)
    for nd in diagram.nodes:
        if isinstance(nd, FreeLoop):
            uses[nd.k] += 1
    for lab in sorted(uses):
        if uses[lab] != 2:
            report.append(DiagramViolation("label multiplicity", f"label {lab} used {uses[lab]} times"))
        elif ins[lab] != 1 or outs[lab] != 1:
            report.append(DiagramViolation("label direction", f"label {lab} is not one in-end and one out-end"))
    labels = sorted(uses)
    if labels[0] < 1:
        report.append(DiagramViolation("label range", f"label {labels[0]} is not positive"))
    missing = sorted(set(range(1, labels[-1] + 1)) - set(labels))
    if missing:
        report.append(DiagramViolation("label gap", f"labels {missing} missing from 1..{labels[-1]}"))
    return report


_TOKEN = re.compile(r"""
    (?P<space>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<quad>(?P<kind>C\+|C-|C−|V|M)\[\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*,\s*(?P<c>\d+)\s*,\s*(?P<d>\d+)\s*\])
  | (?P<loop>O\[\s*(?P<k>\d+)\s*\])
""", re.VERBOSE)


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def parse_records(text: str) -> Diagram:
    """Tokenize ``text`` into a Diagram without structural validation."""
    nodes = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            line, column = _position(text, pos)
            snippet = text[pos:pos + 12].split("\n")[0]
            raise DiagramSyntaxError(f"unrecognized record starting {snippet!r}", line, column)
        if match.group("quad"):
            kind = match.group("kind")
            a, b, c, d = (int(match.group(g)) for g in "abcd")
            if kind == "C+":
                nodes.append(ClassicalCrossing(a, d, c, b, 1))
            elif kind in ("C-", "C−"):
                nodes.append(ClassicalCrossing(c, b, a, d, -1))
            elif kind == "V":
                nodes.append(VirtualNode(a, b, c, d))
            else:
                nodes.append(MarkedVertex(a, b, c, d))
        elif match.group("loop"):
            nodes.append(FreeLoop(int(match.group("k"))))
        end = match.end()
        if match.group("quad") or match.group("loop"):
            if end < len(text) and not (text[end].isspace() or text[end] == "#"):
                line, column = _position(text, end)
                raise DiagramSyntaxError("records must be separated by whitespace", line, column)
        pos = end
    return Diagram(tuple(nodes))


def parse_diagram(text: str) -> Diagram:
    """Parse and validate a diagram code.

    Raises DiagramSyntaxError on malformed text and DiagramError when the
    records do not form a closed, contiguously labelled diagram.
    """
    diagram = parse_records(text)
    report = validate(diagram)
    if report:
        raise DiagramError(report)
    return diagram


def serialize(diagram: Diagram) -> str:
    return diagram.to_text()


def read_diagram(path) -> Diagram:
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())

"""Enumeration of biquandle colorings of a diagram."""

from __future__ import annotations

from dataclasses import dataclass

from .biquandle import Biquandle, image_closure
from .diagram import Diagram, MarkedVertex, VirtualNode


@dataclass(frozen=True)
class Coloring:
    diagram: Diagram
    colors: tuple[int, ...]  # colors[i] is the color of semiarc i + 1

    def __getitem__(self, semiarc: int) -> int:
        return self.colors[semiarc - 1]

    @property
    def used(self) -> frozenset[int]:
        return frozenset(self.colors)


def is_coloring(diagram: Diagram, X: Biquandle, colors) -> bool:
    """Whether ``colors`` (1-based semiarc order) satisfies every node."""
    col = lambda lab: colors[lab - 1]  # noqa: E731
    for cr in diagram.crossings:
        x, y = col(cr.a), col(cr.b)
        if col(cr.c) != X.u(x, y) or col(cr.d) != X.o(y, x):
            return False
    for nd in diagram.virtuals:
        if col(nd.a) != col(nd.c) or col(nd.b) != col(nd.d):
            return False
    for nd in diagram.marked:
        if len({col(lab) for lab in nd.labels}) != 1:
            return False
    return True


def _identified_classes(diagram: Diagram):
    """Union-find over semiarcs glued by virtual and marked nodes."""
    parent = list(range(diagram.semiarc_count + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for nd in diagram.nodes:
        if isinstance(nd, VirtualNode):
            pairs = [(nd.a, nd.c), (nd.b, nd.d)]
        elif isinstance(nd, MarkedVertex):
            pairs = [(nd.a, nd.b), (nd.a, nd.c), (nd.a, nd.d)]
        else:
            continue
        for p, q in pairs:
            p, q = find(p), find(q)
            if p != q:
                parent[max(p, q)] = min(p, q)
    return [find(lab) for lab in range(diagram.semiarc_count + 1)]


def _branch_order(classes, crossings):
    """Classes in the order they are branched on.

    Greedy simulation of propagation: a crossing whose inputs or outputs
    are both known determines the other pair, and the next branch variable
    is the one completing the most such pairs.  The order does not depend
    on the colors chosen, only on which classes are known.
    """
    known = set()
    order = []

    def close():
        changed = True
        while changed:
            changed = False
            for a, b, c, d in crossings:
                if {a, b} <= known or {c, d} <= known:
                    if not {a, b, c, d} <= known:
                        known.update((a, b, c, d))
                        changed = True

    while len(known) < len(classes):
        gain = dict.fromkeys((v for v in classes if v not in known), 0)
        for a, b, c, d in crossings:
            for p, q in ((a, b), (c, d)):
                if p in known and q in gain:
                    gain[q] += 1
                elif q in known and p in gain:
                    gain[p] += 1
        v = max(gain, key=lambda w: (gain[w], -w))
        order.append(v)
        known.add(v)
        close()
    return order


def enumerate_colorings(D: Diagram, X: Biquandle) -> list[Coloring]:
    """All X-colorings of D, sorted lexicographically by color array.

    Classes of identified semiarcs are branched on in the order given by
    ``_branch_order``; after each choice the crossing equations are propagated forward (inputs determine
    outputs) and backward (outputs determine inputs, since the crossing map
    is a bijection).  Conflicts prune the branch.
    """
    k = D.semiarc_count
    rep = _identified_classes(D)
    crossings = [(rep[c.a], rep[c.b], rep[c.c], rep[c.d]) for c in D.crossings]
    watch = {}
    for i, quad in enumerate(crossings):
        for v in set(quad):
            watch.setdefault(v, []).append(i)
    classes = sorted({rep[lab] for lab in range(1, k + 1)})
    order = _branch_order(classes, crossings)
    color = dict.fromkeys(classes, 0)
    results = []

    def assign(v, value, trail):
        if color[v]:
            return color[v] == value
        color[v] = value
        trail.append(v)
        return True

    def propagate(start, trail):
        queue = list(start)
        while queue:
            v = queue.pop()
            for i in watch.get(v, ()):
                a, b, c, d = crossings[i]
                ca, cb, cc, cd = color[a], color[b], color[c], color[d]
                if ca and cb:
                    wanted = ((c, X.u(ca, cb)), (d, X.o(cb, ca)))
                elif cc and cd:
                    back = X.crossing_inputs(cc, cd)
                    if back is None:
                        return False
                    wanted = ((a, back[0]), (b, back[1]))
                else:
                    continue
                for w, value in wanted:
                    fresh = not color[w]
                    if not assign(w, value, trail):
                        return False
                    if fresh:
                        queue.append(w)
        return True

    def search(pos):
        while pos < len(order) and color[order[pos]]:
            pos += 1
        if pos == len(order):
            results.append(tuple(color[rep[lab]] for lab in range(1, k + 1)))
            return
        v = order[pos]
        for value in X.elements:
            trail = []
            assign(v, value, trail)
            if propagate([v], trail):
                search(pos + 1)
            for w in trail:
                color[w] = 0

    search(0)
    return [Coloring(D, colors) for colors in sorted(results)]


def counting_invariant(D: Diagram, X: Biquandle) -> int:
    return len(enumerate_colorings(D, X))


def coloring_image(c: Coloring, X: Biquandle) -> frozenset[int]:
    """The image sub-biquandle: closure of the colors used by ``c``."""
    return image_closure(X, c.used)

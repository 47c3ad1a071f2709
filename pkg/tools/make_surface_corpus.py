"""Build marked graph diagrams for the surface-link corpus.

Two constructions are used:

* the unknotted torus, two marked vertices and no crossings;
* ribbon surfaces: unknotted circles O1..On (spheres) joined by tubes whose
  cores pass through the spanning disks in the order given by a word; each
  passage conjugates the tube's meridian.  Spun 2-bridge knots are 1-fusion
  ribbon 2-knots; a tube from a circle to itself adds a handle.  The tube
  ends are marked vertices.

Every diagram is checked here (with SnapPy, a development tool only) for
trivial lower and upper resolutions.
"""

from __future__ import annotations

import sys
from collections import defaultdict
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from planar import build, offset, to_text  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "bmq" / "data" / "corpus" / "surface"
DELTA = Fraction(1, 20)

# disk sides: x of left and right side, for O1 and O2
SIDES = {1: (-1, 1), 2: (5, 7)}


def trivial_torus():
    P, Q = (0, 0), (4, 0)
    edges = {
        "e1": [P, (0, 2), (4, 2), Q],
        "e2": [P, (0, -2), (4, -2), Q],
        "e3": [Q, (5, 0), (5, 3), (-1, 3), (-1, 0), P],
        "e4": [Q, P],
    }
    lower = {P: [("e3", "e1"), ("e4", "e2")], Q: [("e1", "e4"), ("e2", "e3")]}
    upper = {P: [("e3", "e2"), ("e4", "e1")], Q: [("e1", "e3"), ("e2", "e4")]}
    return edges, (lambda *a: True), lower, upper


def ribbon(ncircles, tubes):
    """Unknotted circles O1..On with tubes between them.

    ``tubes`` is a list of (i, j, word): a tube from Oi to Oj whose core
    crosses the row of circles once per letter; a letter (k, sign) pierces
    the disk of Ok (sign +1 or -1) and passes over every other circle.  A
    tube with i == j adds a handle to Oi.
    """
    centers = {k: 6 * (k - 1) for k in range(1, ncircles + 1)}
    far = 6 * (ncircles - 1) + 3
    lanes = []
    for t, (_, _, word) in enumerate(tubes):
        lanes += [t] * len(word)
    ys = [Fraction(-17, 20) + Fraction(3, 20) * k for k in range(len(lanes))]
    if ys and ys[-1] >= Fraction(9, 10):
        raise ValueError("too many passages for the lane layout")
    edges = {}
    for k in range(1, ncircles + 1):
        c = centers[k]
        edges[f"O{k}"] = [(c, -1), (c + 1, -1), (c + 1, 1), (c - 1, 1), (c - 1, -1), (c, -1)]
    plan = {}
    nsegs = {}
    lower, upper = defaultdict(list), defaultdict(list)
    attach = defaultdict(int)
    k = 0
    for t, (i, j, word) in enumerate(tubes):
        a = (centers[i] - Fraction(3, 10) - Fraction(1, 10) * attach[i], -1)
        attach[i] += 1
        b = (centers[j] + Fraction(3, 10) + Fraction(1, 10) * attach[j], -1)
        attach[j] += 1
        start_y = Fraction(-13, 10) - Fraction(1, 20) * t
        final_y = Fraction(-16, 10) - Fraction(1, 20) * t
        if not word:
            core = [a, (a[0], start_y), (b[0], start_y), b]
        else:
            core = [a, (a[0], start_y), (-3 - k, start_y), (-3 - k, ys[k])]
        for n_letter in range(len(word)):
            last = n_letter == len(word) - 1
            right = far + k - Fraction(1, 2) if last else far + k
            plan[(t, len(core) - 1)] = (t, n_letter)
            core.append((right, ys[k]))
            if last:
                core += [(right, final_y), (b[0], final_y), b]
            else:
                core += [(right, -2 - k), (-4 - k, -2 - k), (-4 - k, ys[k + 1])]
            k += 1
        R = offset(core, DELTA)
        L = offset(core, -DELTA)
        edges[f"R{t}"] = [a] + R[1:-1] + [b]
        edges[f"L{t}"] = ([a] + L[1:-1] + [b])[::-1]
        nseg = len(core) - 1
        nsegs[t] = nseg
        # split circles at the attaching points
        lower[a] = [("in", i, "R", t), ("L", t, "out", i)]
        upper[a] = [("in", i, "out", i), ("L", t, "R", t)]
        lower[b] = [("R", t, "L", t), ("in", j, "out", j)]
        upper[b] = [("R", t, "out", j), ("in", j, "L", t)]
    edges = _split_circles(edges, lower)
    pairing_low = _name_pairs(lower, edges)
    pairing_up = _name_pairs(upper, edges)

    def core_seg(name, seg):
        t = int(name[1:])
        return t, (seg if name[0] == "R" else nsegs[t] - 1 - seg)

    def over(first, second, pt):
        (na, ia), (nb, ib) = first, second
        tube_a, tube_b = na[0] in "RL", nb[0] in "RL"
        if tube_a and tube_b:
            return core_seg(na, ia) > core_seg(nb, ib)
        if not tube_a and not tube_b:
            raise ValueError("circles must not cross")
        tube, seg, circle = (na, ia, nb) if tube_a else (nb, ib, na)
        key = core_seg(tube, seg)
        tube_over = True
        if key in plan:
            t, n_letter = plan[key]
            disk, sign = tubes[t][2][n_letter]
            ck = int(circle[1:].split(".")[0])
            if disk == ck and sign:
                at_left = pt[0] == centers[ck] - 1
                tube_over = at_left if sign > 0 else not at_left
        return tube_over if tube_a else not tube_over

    return edges, over, pairing_low, pairing_up


def _split_circles(edges, marks):
    """Cut each circle into arcs between its attaching points."""
    out = {k: v for k, v in edges.items() if not k.startswith("O")}
    for name, poly in edges.items():
        if not name.startswith("O"):
            continue
        y = poly[0][1]
        cx = poly[0][0]
        pts = sorted(p for p in marks if p[1] == y and cx - 1 < p[0] < cx + 1)
        if not pts:
            out[name] = poly
            continue
        # walk counterclockwise from the first attaching point
        loop = [pts[0], (cx + 1, -1), (cx + 1, 1), (cx - 1, 1), (cx - 1, -1)]
        arcs = []
        rest = pts[1:]
        # arcs along the bottom side between consecutive points
        cur = [pts[0]]
        for p in rest:
            cur.append(p)
            arcs.append(cur)
            cur = [p]
        cur += loop[1:] + [pts[0]]
        arcs.append(cur)
        for n, arc in enumerate(arcs):
            out[f"{name}.{n}"] = arc
    return out


def _name_pairs(spec, edges):
    """Resolution pairs (incoming edge, outgoing edge) at each vertex."""
    result = {}
    for pt, pairs in spec.items():
        ins = {k for k, v in edges.items() if tuple(map(Fraction, v[-1])) == tuple(map(Fraction, pt))}
        outs = {k for k, v in edges.items() if tuple(map(Fraction, v[0])) == tuple(map(Fraction, pt))}
        named = []
        for src_kind, src_t, dst_kind, dst_t in pairs:
            src = _pick(ins, src_kind, src_t)
            dst = _pick(outs, dst_kind, dst_t)
            named.append((src, dst))
        result[pt] = named
    return result


def _pick(names, kind, t):
    if kind in ("in", "out"):
        hits = [n for n in names if n.startswith(f"O{t}.") or n == f"O{t}"]
    else:
        hits = [n for n in names if n == f"{kind}{t}"]
    if len(hits) != 1:
        raise ValueError(f"ambiguous vertex edges {names} for {kind}{t}")
    return hits[0]


def resolve(records, info, pairing):
    """PD code of a resolution; pairing maps vertex index to edge name pairs."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            x = parent[x]
        return x

    names = info["edge_of"]
    verts = [r for r in records if r[0] == "M"]
    for (_, ins, outs), pairs in zip(verts, pairing):
        for src, dst in pairs:
            i = next(x for x in ins if names[x] == src)
            o = next(x for x in outs if names[x] == dst)
            parent[find(i)] = find(o)
    crossings = [r for r in records if r[0] == "C"]
    # undo Reidemeister I kinks, which SnapPy's PD reader cannot orient
    kinks = set()
    changed = True
    while changed:
        changed = False
        for rec in crossings:
            _, _, ui, oi, uo, oo = rec
            if find(uo) == find(oi):
                kinks.add(find(uo))
                parent[find(ui)] = find(oo)
            elif find(oo) == find(ui):
                kinks.add(find(oo))
                parent[find(oi)] = find(uo)
            else:
                continue
            crossings.remove(rec)
            changed = True
            break
    succ = {}
    for _, _, ui, oi, uo, oo in crossings:
        succ[find(ui)] = find(uo)
        succ[find(oi)] = find(oo)
    # number labels consecutively along components so SnapPy reads directions
    order = {}
    for start in sorted(succ):
        x = start
        while x not in order:
            order[x] = len(order) + 1
            x = succ[x]
    pd = []
    for _, sign, ui, oi, uo, oo in crossings:
        labs = (ui, oo, uo, oi) if sign > 0 else (ui, oi, uo, oo)
        pd.append([order[find(x)] for x in labs])
    loose = {find(x) for x in range(1, info["semiarcs"] + 1)} - set(order) - {find(k) for k in kinks}
    return pd, len(loose)


def is_unlink(pd, loose):
    import snappy

    if not pd:
        return loose
    link = snappy.Link(pd)
    comps = len(link.link_components) + loose
    link.simplify("global")
    return comps if not link.crossings else None


SPUN = {
    # b = (ab) a (ab)^-1 : tube passes D2 then D1
    "8_1": [(2, 1), (1, 1)],
    "10_1": [(2, 1), (1, -1), (2, -1), (1, 1)],
}


def make(name, drawing, comment):
    edges, over, lower, upper = drawing
    records, info = build(edges, over)
    pts = sorted(lower, key=lambda p: tuple(map(Fraction, p)))
    low_pd = resolve(records, info, [lower[p] for p in pts])
    up_pd = resolve(records, info, [upper[p] for p in pts])
    low, up = is_unlink(*low_pd), is_unlink(*up_pd)
    if not low or not up:
        raise SystemExit(f"{name}: a resolution is not a trivial link")
    text = f"# {name}: {comment}\n# lower resolution: {low}-component unlink; upper: {up}-component unlink\n"
    text += to_text(records) + "\n"
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / f"{name}.pdk").write_text(text, encoding="utf-8")
    print(name, len(records), "records", low, up)


def main():
    make("2_1", trivial_torus(), "unknotted torus")
    make("8_1", ribbon(2, [(1, 2, SPUN["8_1"])]), "spun trefoil, 1-fusion ribbon presentation")
    make("10_1", ribbon(2, [(1, 2, SPUN["10_1"])]), "spun figure eight knot, 1-fusion ribbon presentation")
    make("6^{0,1}_1", ribbon(2, [(2, 2, [(1, 1)])]),
         "spun Hopf link: a 2-sphere and a torus whose handle passes through the sphere")
    make("10^{0,0,1}_1", ribbon(3, [(3, 3, [(1, 1), (2, 1)])]),
         "two 2-spheres and a torus whose handle passes through both spheres")


if __name__ == "__main__":
    main()

"""Planar polyline drawings turned into diagram records.

A drawing is a list of oriented edges.  Each edge is a polyline; closed
curves repeat their first point at the end.  Edges that end at a shared
point form a marked vertex there.  Crossings are found geometrically and an
``over`` callback decides which strand passes over.

Used only to produce and check the shipped surface-link corpus.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction


def _seg_intersection(p, q, r, s):
    """Interior intersection point of segments pq and rs, with parameters."""
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (s[0] - r[0], s[1] - r[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        return None
    w = (r[0] - p[0], r[1] - p[1])
    t = Fraction(w[0] * d2[1] - w[1] * d2[0], den)
    u = Fraction(w[0] * d1[1] - w[1] * d1[0], den)
    if 0 < t < 1 and 0 < u < 1:
        return t, u, d1, d2
    if 0 <= t <= 1 and 0 <= u <= 1:
        pt = (p[0] + t * d1[0], p[1] + t * d1[1])
        return ("touch", pt)
    return None


def offset(core, delta):
    """Axis-parallel polyline shifted ``delta`` to the right of travel."""
    pts = [tuple(map(Fraction, c)) for c in core]
    normals = []
    for a, b in zip(pts, pts[1:]):
        dx, dy = b[0] - a[0], b[1] - a[1]
        length = abs(dx) + abs(dy)
        normals.append((dy / length, -dx / length))
    out = [(pts[0][0] + delta * normals[0][0], pts[0][1] + delta * normals[0][1])]
    for i in range(1, len(pts) - 1):
        n1, n2 = normals[i - 1], normals[i]
        out.append((pts[i][0] + delta * (n1[0] + n2[0]), pts[i][1] + delta * (n1[1] + n2[1])))
    out.append((pts[-1][0] + delta * normals[-1][0], pts[-1][1] + delta * normals[-1][1]))
    return out


def build(edges, over):
    """Records (kind, labels) for a drawing.

    ``edges`` maps a name to a polyline; ``over((name_a, seg_a), (name_b,
    seg_b), point)`` is true when the first strand passes over at ``point``.
    Returns (records, info) where a record is ("C", sign, UI, OI, UO, OO)
    or ("M", ins, outs).
    """
    edges = {k: [tuple(map(Fraction, p)) for p in v] for k, v in edges.items()}
    names = list(edges)
    # events along each edge: (segment index, parameter, crossing id)
    events = defaultdict(list)
    crossings = []
    for i, a in enumerate(names):
        for b in names[i:]:
            pa, pb = edges[a], edges[b]
            for ia in range(len(pa) - 1):
                for ib in range(len(pb) - 1):
                    if a == b and ib <= ia + 1:
                        continue
                    hit = _seg_intersection(pa[ia], pa[ia + 1], pb[ib], pb[ib + 1])
                    if hit is None:
                        continue
                    if hit[0] == "touch":
                        pt = hit[1]
                        ends = {pa[0], pa[-1], pb[0], pb[-1]}
                        if pt in ends:
                            continue
                        raise ValueError(f"degenerate contact of {a} and {b} at {pt}")
                    t, u, d1, d2 = hit
                    pt = (pa[ia][0] + t * d1[0], pa[ia][1] + t * d1[1])
                    if over((a, ia), (b, ib), pt):
                        o, dover, dunder = (a, ia, t), d1, d2
                        un = (b, ib, u)
                    else:
                        o, dover, dunder = (b, ib, u), d2, d1
                        un = (a, ia, t)
                    cross = dover[0] * dunder[1] - dover[1] * dunder[0]
                    cid = len(crossings)
                    crossings.append({"sign": 1 if cross > 0 else -1, "pt": pt})
                    events[o[0]].append((o[1], o[2], cid, "O"))
                    events[un[0]].append((un[1], un[2], cid, "U"))
    # semiarcs
    label = 0
    ends_at = {}
    starts_at = {}
    vert_in = defaultdict(list)
    vert_out = defaultdict(list)
    edge_of = {}
    for name in names:
        pts = edges[name]
        evs = sorted(events[name])
        closed = pts[0] == pts[-1] and not _is_vertex(pts[0], edges, name)
        if closed and not evs:
            raise ValueError(f"edge {name} is a crossingless loop")
        first = label + 1
        label += 1
        if not closed:
            vert_out[pts[0]].append(label)
            edge_of[label] = name
        for k, (_, _, cid, role) in enumerate(evs):
            ends_at[(cid, role)] = label
            if closed and k == len(evs) - 1:
                starts_at[(cid, role)] = first
            else:
                label += 1
                starts_at[(cid, role)] = label
        if not closed:
            vert_in[pts[-1]].append(label)
            edge_of[label] = name
    records = []
    for cid, c in enumerate(crossings):
        records.append(("C", c["sign"], ends_at[(cid, "U")], ends_at[(cid, "O")],
                        starts_at[(cid, "U")], starts_at[(cid, "O")]))
    for pt in sorted(vert_in):
        records.append(("M", tuple(vert_in[pt]), tuple(vert_out[pt])))
        if len(vert_in[pt]) != 2 or len(vert_out[pt]) != 2:
            raise ValueError(f"vertex at {pt} is not 2-in 2-out")
    return records, {"crossings": crossings, "semiarcs": label, "edge_of": edge_of}


def _is_vertex(pt, edges, name):
    return any(pt in (v[0], v[-1]) for k, v in edges.items() if k != name)


def to_text(records) -> str:
    out = []
    for rec in records:
        if rec[0] == "C":
            _, sign, ui, oi, uo, oo = rec
            out.append(f"C{'+' if sign > 0 else '-'}[{ui},{oi},{uo},{oo}]")
        else:
            _, ins, outs = rec
            out.append(f"M[{ins[0]},{ins[1]},{outs[0]},{outs[1]}]")
    return "\n".join(out)

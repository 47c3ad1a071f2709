"""Write the classical link corpus from SnapPy's PD codes.

Run once by hand; SnapPy is a development tool only and the package never
imports it.  For a PD tuple (i, j, k, l) the under strand runs i -> k; the
over strand runs l -> j at a positive crossing and j -> l at a negative one.
"""

import json
from pathlib import Path

import snappy

OUT = Path(__file__).resolve().parents[1] / "src" / "bmq" / "data" / "corpus"

LINKS = ["L2a1", "L4a1", "L5a1", "L6a1", "L6a2", "L6a3", "L6a4", "L6a5", "L6n1",
         "L7a1", "L7a2", "L7a3", "L7a4", "L7a5", "L7a6", "L7a7", "L7n1", "L7n2"]
KNOTS = ["3_1", "4_1"]


def records(name):
    link = snappy.Link(name)
    out = []
    for c, (i, j, k, l) in zip(link.crossings, link.PD_code()):
        oi, oo = (l, j) if c.sign > 0 else (j, l)
        out.append(f"C{'+' if c.sign > 0 else '-'}[{i + 1},{oi + 1},{k + 1},{oo + 1}]")
    return out, len(link.link_components)


def write(folder, name, note):
    recs, comps = records(name)
    text = f"# {name}: {note}; {comps} component(s), PD code from SnapPy's link table\n"
    text += "\n".join(recs) + "\n"
    (OUT / folder).mkdir(parents=True, exist_ok=True)
    (OUT / folder / f"{name}.pdk").write_text(text, encoding="utf-8")


def main():
    for name in LINKS:
        write("classical", name, "Thistlethwaite link table")
    (OUT / "classical" / "index.json").write_text(json.dumps({"order": LINKS}, indent=1) + "\n")
    for name in KNOTS:
        write("knots", name, "Rolfsen knot table")


if __name__ == "__main__":
    main()

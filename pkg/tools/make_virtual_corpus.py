"""Write the virtual knot corpus from signed Gauss codes.

Virtual crossings are left implicit: a Gauss code fixes the classical
crossings and the semiarcs between them, which is all the colorings and
bead systems see.
"""

import re
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "bmq" / "data" / "corpus" / "virtual"

KNOTS = {
    "2.1": ("O1-O2-U1-U2-", "virtual trefoil"),
    "3.6": ("O1+U2+O3+U1+O2+U3+", "classical trefoil"),
    "4.99": ("O1-O2+U3-U1-O3-O4+U2+U4+",
             "representative of the only 4-crossing class with rank-2 vertices; "
             "identified by elimination, not from a drawn table entry"),
    "4.108": ("O1-U2-O3+U4+O2-U1-O4+U3+", "classical figure eight knot"),
}


def records(code):
    toks = re.findall(r"([OU])(\d+)([+-])", code)
    n = len(toks)
    seen = {}
    for p, (kind, c, sign) in enumerate(toks, start=1):
        inn = p - 1 if p > 1 else n
        seen.setdefault(c, {})[kind] = (inn, p)
        seen[c]["sign"] = sign
    out = []
    for c in sorted(seen, key=int):
        d = seen[c]
        out.append(f"C{d['sign']}[{d['U'][0]},{d['O'][0]},{d['U'][1]},{d['O'][1]}]")
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (code, note) in KNOTS.items():
        text = f"# {name}: {note}\n# signed Gauss code {code}; virtual crossings implicit\n"
        text += "\n".join(records(code)) + "\n"
        (OUT / f"{name}.pdk").write_text(text, encoding="utf-8")


if __name__ == "__main__":
    main()

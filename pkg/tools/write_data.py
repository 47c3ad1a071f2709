"""Write the biquandles, modules, endomorphism lists and data vectors used by
the shipped corpus into src/bmq/data.  Tables are transcribed by hand."""

import json
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "bmq" / "data"

BIQUANDLES = {
    # three colorings of the figure eight knot
    "hs3": dict(under=[[2, 3, 1], [3, 1, 2], [1, 2, 3]], over=[[2, 2, 2], [1, 1, 1], [3, 3, 3]]),
    # flagship quiver example; also used for the virtual table
    "q3": dict(under=[[2, 2, 2], [1, 1, 1], [3, 3, 3]], over=[[2, 3, 1], [3, 1, 2], [1, 2, 3]]),
    "cl4a": dict(under=[[2, 2, 1, 2], [1, 1, 2, 1], [3, 3, 4, 4], [4, 4, 3, 3]],
                 over=[[2, 2, 1, 2], [1, 1, 2, 1], [3, 3, 4, 4], [4, 4, 3, 3]]),
    "cl4b": dict(under=[[2, 2, 2, 2], [1, 1, 1, 1], [3, 3, 4, 4], [4, 4, 3, 3]],
                 over=[[2, 2, 1, 1], [1, 1, 2, 2], [4, 4, 4, 4], [3, 3, 3, 3]]),
    "sf3": dict(under=[[3, 1, 3], [2, 2, 2], [1, 3, 1]], over=[[3, 3, 3], [2, 2, 2], [1, 1, 1]]),
}

MODULES = {
    "hs3-z3": ("hs3", dict(m=3, t=[[2, 1, 1], [2, 2, 1], [1, 2, 1]], s=[[2, 2, 1], [1, 2, 2], [1, 1, 1]],
                            r=[[1, 1, 2], [1, 1, 2], [1, 1, 2]])),
    "q3-z3": ("q3", dict(m=3, t=[[1, 1, 1], [1, 1, 1], [1, 1, 1]], s=[[1, 1, 2], [1, 1, 2], [2, 2, 1]],
                          r=[[2, 1, 1], [1, 2, 1], [2, 2, 2]])),
    "q3-z5": ("q3", dict(m=5, t=[[1, 1, 1], [1, 1, 1], [4, 4, 4]], s=[[1, 4, 1], [4, 1, 4], [4, 1, 4]],
                          r=[[2, 2, 3], [3, 2, 2], [3, 3, 3]])),
    "cl4a-z3": ("cl4a", dict(m=3, t=[[1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 2, 1], [1, 1, 2, 1]],
                              s=[[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 2, 2], [0, 0, 1, 1]],
                              r=[[1, 1, 1, 1], [1, 1, 1, 1], [2, 2, 1, 1], [2, 2, 2, 2]])),
    "cl4b-z3": ("cl4b", dict(m=3, t=[[1, 1, 2, 2], [1, 1, 2, 2], [1, 1, 1, 1], [1, 1, 1, 1]],
                              s=[[1, 1, 2, 1], [1, 1, 2, 1], [1, 1, 1, 2], [2, 2, 2, 1]],
                              r=[[2, 2, 1, 1], [2, 2, 1, 1], [1, 1, 2, 2], [1, 1, 2, 2]])),
    "sf3-z3": ("sf3", dict(m=3, t=[[1, 1, 1], [2, 1, 2], [1, 1, 1]], s=[[1, 0, 2], [0, 1, 0], [2, 0, 1]],
                            r=[[2, 2, 2], [2, 2, 2], [2, 2, 2]])),
}

# endomorphism lists as printed, images of 1..n
ENDOS = {
    "q3-printed": [[3, 3, 3], [1, 2, 3], [2, 1, 3]],
    "q3-virtual-printed": [[1, 2, 3], [2, 1, 3], [3, 3, 3]],
    "cl4a-sigma": [[2, 1, 3, 4]],
    "cl4b-printed": [[1, 2, 4, 3], [2, 1, 4, 3], [2, 1, 3, 4]],
    "sf3-printed": [[1, 2, 3], [2, 2, 2], [3, 2, 1]],
    "sf3-nonidentity": [[2, 2, 2], [3, 2, 1]],
}

VECTORS = {
    "flagship": ("q3", "q3-z3", "all"),
    "classical-a": ("cl4a", "cl4a-z3", "cl4a-sigma"),
    "classical-b": ("cl4b", "cl4b-z3", "cl4b-printed"),
    "virtual": ("q3", "q3-z5", "q3-virtual-printed"),
    "surface": ("sf3", "sf3-z3", "sf3-nonidentity"),
}


def dump(path, obj):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=1) + "\n", encoding="utf-8")


def main():
    for name, tables in BIQUANDLES.items():
        dump(DATA / "biquandles" / f"{name}.json", {"n": len(tables["under"]), **tables})
    for name, (bq, tables) in MODULES.items():
        dump(DATA / "modules" / f"{name}.json", {"biquandle": bq, **tables})
    for name, images in ENDOS.items():
        dump(DATA / "endos" / f"{name}.json", {"images": images})
    for name, (bq, mod, endos) in VECTORS.items():
        dump(DATA / "vectors" / f"{name}.json", {
            "biquandle": f"../biquandles/{bq}.json",
            "module": f"../modules/{mod}.json",
            "endomorphisms": endos if endos == "all" else f"../endos/{endos}.json",
        })
    dump(DATA / "semantics.json", {
        "repetition": "arrow-simple", "maximality": "component-longest", "rank_vertex": "path-constant",
    })


if __name__ == "__main__":
    main()

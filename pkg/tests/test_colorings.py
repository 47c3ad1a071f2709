import itertools

import pytest

from bmq.biquandle import image_closure
from bmq.colorings import coloring_image, counting_invariant, enumerate_colorings, is_coloring
from bmq.config import CORPUS_DIR
from bmq.diagram import parse_diagram, read_diagram
from conftest import biquandle

SMALL = {
    "unknot": "O[1]",
    "two loops": "O[1] O[2]",
    "kink+": "C+[1,2,2,1]",
    "kink-": "C-[2,1,1,2]",
    "hopf": "C+[1,2,4,3] C+[3,4,2,1]",
    "hopf-": "C-[1,2,4,3] C-[3,4,2,1]",
    "virtual trefoil": "C-[2,4,3,1] C-[3,1,4,2]",
    "trefoil": "C+[3,6,4,1] C+[1,4,2,5] C+[5,2,6,3]",
    "torus": "M[1,2,3,4] M[3,4,1,2]",
    "virtual": "V[1,2,3,4] V[3,4,1,2]",
    "marked+crossing": "M[4,3,1,2] C+[1,2,3,4]",
}
BIQUANDLES = ["hs3", "q3", "cl4a", "cl4b", "sf3"]


def brute(D, X):
    return sorted(c for c in itertools.product(X.elements, repeat=D.semiarc_count) if is_coloring(D, X, c))


@pytest.mark.parametrize("name", BIQUANDLES)
@pytest.mark.parametrize("code", SMALL.values(), ids=list(SMALL))
def test_backtracking_matches_brute_force(code, name):
    D = parse_diagram(code)
    assert D.semiarc_count <= 6
    X = biquandle(name)
    assert [c.colors for c in enumerate_colorings(D, X)] == brute(D, X)


def test_figure_eight_three_colorings():
    D = read_diagram(CORPUS_DIR / "knots" / "4_1.pdk")
    assert counting_invariant(D, biquandle("hs3")) == 3
    assert counting_invariant(D, biquandle("q3")) == 3


def test_unknot_counts():
    for name in BIQUANDLES:
        X = biquandle(name)
        assert counting_invariant(parse_diagram("O[1]"), X) == X.n


def test_larger_diagrams_against_brute_force():
    # figure eight (8 semiarcs) with a 3-element biquandle: 6561 assignments
    D = read_diagram(CORPUS_DIR / "knots" / "4_1.pdk")
    for name in ("hs3", "q3", "sf3"):
        X = biquandle(name)
        assert [c.colors for c in enumerate_colorings(D, X)] == brute(D, X)


@pytest.mark.parametrize("path", sorted(CORPUS_DIR.glob("*/*.pdk")), ids=lambda p: p.stem)
def test_every_coloring_satisfies_constraints(path):
    D = read_diagram(path)
    for name in ("q3", "cl4a", "sf3"):
        X = biquandle(name)
        found = enumerate_colorings(D, X)
        assert len({c.colors for c in found}) == len(found)
        assert [c.colors for c in found] == sorted(c.colors for c in found)
        for c in found:
            assert is_coloring(D, X, c.colors)


def test_coloring_image():
    X = biquandle("q3")
    D = read_diagram(CORPUS_DIR / "knots" / "4_1.pdk")
    images = {coloring_image(c, X) for c in enumerate_colorings(D, X)}
    assert frozenset({3}) in images
    for c in enumerate_colorings(D, X):
        image = coloring_image(c, X)
        assert image == image_closure(X, set(c.colors))
        under, over = X.restricted(image)
        from bmq.biquandle import check_biquandle
        assert check_biquandle(under, over) == []

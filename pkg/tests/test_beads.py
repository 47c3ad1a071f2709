import itertools
import random

import pytest

from bmq.beads import (build_bead_system, row_reduce, smith_diagonal, solve_matrix, bead_rank)
from bmq.colorings import Coloring, enumerate_colorings
from bmq.diagram import parse_records
from bmq.errors import DataError

from conftest import biquandle, corpus, module
from reference import HS_MATRIX, HS_REDUCED


def brute_solutions(matrix, ncols, m):
    return sum(all(sum(a * v for a, v in zip(row, vec)) % m == 0 for row in matrix)
               for vec in itertools.product(range(m), repeat=ncols))


def normalize(row, p):
    lead = next(v for v in row if v)
    inv = pow(lead, -1, p)
    return tuple(v * inv % p for v in row)


def test_printed_matrix_rank_and_reduced_form():
    rows, pivots = row_reduce(HS_MATRIX, 3)
    assert len(pivots) == 7
    assert rows == HS_REDUCED
    # the kernel is spanned by the all-ones vector
    assert all(sum(row) % 3 == 0 for row in HS_MATRIX)
    assert brute_solutions(HS_MATRIX, 8, 3) == 3


def test_printed_matrix_is_our_system_up_to_relabelling():
    """Rows agree as sets after a column permutation and unit scaling.

    A row-space comparison alone would be vacuous (both kernels are the
    all-ones line), so rows are matched individually.
    """
    X = biquandle("hs3")
    M = module("hs3-z3", X)
    D = corpus("knots", "4_1")
    target = sorted(normalize(r, 3) for r in HS_MATRIX)
    matched = []
    for c in enumerate_colorings(D, X):
        A = build_bead_system(c, M).matrix
        assert len(A) == 8 and len(A[0]) == 8
        hits = [perm for perm in itertools.permutations(range(8))
                if sorted(normalize([r[j] for j in perm], 3) for r in A) == target]
        if hits:
            matched.append(c.colors)
            assert len(row_reduce(A, 3)[1]) == 7
    assert sorted(matched) == [(1, 2, 1, 2, 1, 2, 1, 2), (2, 1, 2, 1, 2, 1, 2, 1)]


def test_solution_count_matches_brute_force_prime():
    rng = random.Random(3)
    for _ in range(200):
        rows, cols = rng.randint(0, 3), rng.randint(1, 3)
        A = [[rng.randrange(5) for _ in range(cols)] for _ in range(rows)]
        assert solve_matrix(A, cols, 5).size == brute_solutions(A, cols, 5), A


@pytest.mark.parametrize("m", [4, 6, 9])
def test_solution_count_matches_brute_force_composite(m):
    rng = random.Random(m)
    for _ in range(60):
        rows, cols = rng.randint(1, 3), rng.randint(1, 3)
        A = [[rng.randrange(m) for _ in range(cols)] for _ in range(rows)]
        assert solve_matrix(A, cols, m).size == brute_solutions(A, cols, m), A


def test_zero_matrix_and_empty_system():
    assert solve_matrix([[0, 0, 0]], 3, 3).rank == 3
    assert solve_matrix([], 2, 7).rank == 2


def test_composite_factors():
    # 2x = 0 over Z_4 has solutions {0, 2}
    sol = solve_matrix([[2]], 1, 4)
    assert sol.rank == 0 and sol.invariant_factors == (2,)
    assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]


def test_unknot_rank_one():
    X = biquandle("q3")
    M = module("q3-z3", X)
    D = parse_records("O[1]")
    for c in enumerate_colorings(D, X):
        assert bead_rank(c, M) == 1


def test_hopf_system_shape_and_row_order():
    X = biquandle("q3")
    M = module("q3-z3", X)
    D = corpus("classical", "L2a1")
    c = enumerate_colorings(D, X)[0]
    sys = build_bead_system(c, M)
    assert sys.shape == (4, 4)
    nd = D.nodes[0]
    t, s, r = M.coefficients(c[nd.a], c[nd.b])
    first = [0] * 4
    for coeff, lab in ((1, nd.c), (-t, nd.a), (-s, nd.b)):
        first[lab - 1] = (first[lab - 1] + coeff) % 3
    assert list(sys.matrix[0]) == first


def test_coloring_outside_module_rejected():
    M = module("q3-z3", biquandle("q3"))
    D = corpus("classical", "L2a1")
    c = Coloring(D, (4, 4, 4, 4))
    with pytest.raises(DataError):
        build_bead_system(c, M)

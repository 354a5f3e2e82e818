from fractions import Fraction

import pytest

from SemiflowNet.arithmetic import (SimplexTableau, extract_independent_subset,
                                    find_nonnegative_solution, gcd_normalize,
                                    rational_rank, solve_rational)
from SemiflowNet.exceptions import DimensionError

STC2 = [(0, 1, 1, 0), (0, 1, 0, 1), (1, 0, 1, 0), (1, 0, 0, 1)]
G1, G2, G3 = (2, 2, 3, 0, 0), (1, 1, 0, 1, 0), (5, 5, 0, 0, 3)
F1 = (3, 3, 2, 0, 1)


def test_gcd_normalize():
    assert gcd_normalize((2, 4, 0)) == ((1, 2, 0), 2)
    assert gcd_normalize((9, 9, 6, 0, 3)) == ((3, 3, 2, 0, 1), 3)
    assert gcd_normalize((0, 0)) == ((0, 0), 0)


def test_gcd_normalize_is_idempotent():
    once, _ = gcd_normalize((6, 10, 4))
    assert gcd_normalize(once) == (once, 1)


def test_gcd_normalize_rejects_non_integers():
    with pytest.raises(ValueError):
        gcd_normalize((Fraction(1, 2), 1))


def test_rational_rank():
    assert rational_rank([(1, 2), (2, 4)]) == 1
    assert rational_rank(STC2) == 3
    assert rational_rank([]) == 0


def test_rational_rank_dimension_mismatch():
    with pytest.raises(DimensionError):
        rational_rank([(1, 2), (1, 2, 3)])


@pytest.mark.parametrize("factor", [2, 3, Fraction(1, 7)])
def test_rank_is_invariant_under_scaling(factor):
    scaled = [tuple(factor * x for x in v) for v in STC2]
    assert rational_rank(scaled) == rational_rank(STC2)


def test_extract_independent_subset_keeps_rank_increasing_vectors():
    subset = extract_independent_subset(STC2)
    assert subset == STC2[:3]
    assert len(subset) == rational_rank(STC2)


def test_solve_rational():
    alpha, certificate = solve_rational([G1, G2, G3], F1)
    assert certificate is None
    assert alpha == (Fraction(2, 3), 0, Fraction(1, 3))


def test_solve_rational_inconsistent():
    alpha, certificate = solve_rational([(1, 0)], (0, 1))
    assert alpha is None
    assert certificate == (1, 2)


def test_find_nonnegative_solution():
    alpha, optimum = find_nonnegative_solution([G1, G2, G3], F1)
    assert optimum is None
    assert alpha == (Fraction(2, 3), 0, Fraction(1, 3))


def test_find_nonnegative_solution_negative_target():
    alpha, optimum = find_nonnegative_solution([(-1,)], (-2,))
    assert alpha == (2,)


def test_find_nonnegative_solution_infeasible():
    alpha, optimum = find_nonnegative_solution([(1, 1)], (1, 0))
    assert alpha is None
    assert optimum > 0


def test_infeasible_when_only_negative_coefficients_work():
    alpha, optimum = find_nonnegative_solution([(1, 0), (0, 1)], (1, -1))
    assert alpha is None
    assert optimum == 1


def test_simplex_tableau_reaches_zero_on_feasible_systems():
    tableau = SimplexTableau([[1, 1], [1, -1]], [3, 1])
    assert tableau.solve() == 0
    assert tableau.primal_solution() == (2, 1)
    assert tableau.pivots >= 2

"""Exact matrix arithmetic against brute-force oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parinv import Matrix, format_scalar, parse_scalar, solve_linear
from parinv.exceptions import BadIndexError, NonSquareError, NotUnitriangularError
from parinv.linalg import det_permutation_sum

scalars = st.fractions(
    min_value=-9, max_value=9, max_denominator=6
)


def square(n):
    return st.lists(
        st.lists(scalars, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(Matrix.from_rows)


def test_scalar_round_trip():
    for text in ["0", "7", "-7", "3/4", "-22/7"]:
        assert format_scalar(parse_scalar(text)) == text
    assert parse_scalar("6/4") == Fraction(3, 2)
    with pytest.raises(ValueError):
        parse_scalar("seven")
    with pytest.raises(ValueError):
        parse_scalar("1/0")


def test_indexing_is_one_based():
    mat = Matrix.zeros(2, 3)
    mat.set_at(1, 3, Fraction(5))
    assert mat.at(1, 3) == 5
    with pytest.raises(BadIndexError):
        mat.at(0, 1)
    with pytest.raises(BadIndexError):
        mat.at(1, 4)


def test_matmul_and_identity():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert a @ b == Matrix.from_rows([[2, 1], [4, 3]])
    assert a @ Matrix.identity(2) == a
    assert (a - a) == Matrix.zeros(2, 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_det_matches_permutation_expansion(mat):
    assert mat.det() == det_permutation_sum(mat)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(square), st.integers(1, 4).flatmap(square))
def test_det_is_multiplicative(a, b):
    if a.rows == b.rows:
        assert (a @ b).det() == a.det() * b.det()


def test_det_rejects_non_square():
    with pytest.raises(NonSquareError):
        Matrix.zeros(2, 3).det()


def test_minor_picks_rows_and_columns():
    mat = Matrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert mat.minor([1, 2], [2, 3]) == Fraction(2 * 6 - 3 * 5)
    assert mat.minor([], []) == 1
    with pytest.raises(BadIndexError):
        mat.minor([2, 1], [1, 2])


def test_rank_small_cases():
    assert Matrix.zeros(3, 3).rank() == 0
    assert Matrix.identity(4).rank() == 4
    assert Matrix.from_rows([[1, 2], [2, 4], [3, 6]]).rank() == 1


def test_unitriangular_inverse():
    g = Matrix.from_rows([[1, 2, 3], [0, 1, 4], [0, 0, 1]])
    assert g.is_unitriangular()
    assert g @ g.unitriangular_inverse() == Matrix.identity(3)
    with pytest.raises(NotUnitriangularError):
        Matrix.from_rows([[2, 0], [0, 1]]).unitriangular_inverse()


def test_solve_linear_unique():
    a = Matrix.from_rows([[2, 1], [1, 3]])
    sol = solve_linear(a, [Fraction(5), Fraction(10)])
    assert sol == [Fraction(1), Fraction(3)]


def test_solve_linear_inconsistent():
    a = Matrix.from_rows([[1, 1], [2, 2]])
    assert solve_linear(a, [Fraction(1), Fraction(3)]) is None


def test_solve_linear_underdetermined_sets_free_vars_to_zero():
    a = Matrix.from_rows([[1, 1, 0]])
    sol = solve_linear(a, [Fraction(4)])
    assert sol == [Fraction(4), Fraction(0), Fraction(0)]


@settings(max_examples=40, deadline=None)
@given(
    st.integers(2, 4).flatmap(
        lambda n: st.tuples(square(n), st.lists(scalars, min_size=n, max_size=n))
    )
)
def test_solve_linear_solutions_really_solve(case):
    a, rhs = case
    sol = solve_linear(a, list(rhs))
    if sol is not None:
        for i in range(1, a.rows + 1):
            assert sum(a.at(i, k + 1) * sol[k] for k in range(a.cols)) == rhs[i - 1]

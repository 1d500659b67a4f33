"""Conjugation action helpers."""

from fractions import Fraction

import pytest

from parinv import Matrix, adjoint, elementary, random_unitriangular
from parinv.action import apply_elementary, apply_row_op, corner_of, embed_corner
from parinv.exceptions import BadIndexError, NotUnitriangularError


def test_elementary_shape():
    g = elementary(3, 1, 3, Fraction(5))
    assert g.at(1, 3) == 5
    assert g.at(1, 1) == g.at(2, 2) == g.at(3, 3) == 1
    with pytest.raises(BadIndexError):
        elementary(3, 3, 1, Fraction(1))


def test_adjoint_is_conjugation(rng):
    g = random_unitriangular(5, rng)
    x = Matrix.from_rows([[rng.randint(-5, 5) for _ in range(5)] for _ in range(5)])
    assert adjoint(g, x) == g @ x @ g.unitriangular_inverse()
    assert adjoint(Matrix.identity(5), x) == x


def test_adjoint_rejects_non_unitriangular():
    with pytest.raises(NotUnitriangularError):
        adjoint(Matrix.from_rows([[2, 0], [0, 1]]), Matrix.zeros(2, 2))


def test_adjoint_is_an_action(rng):
    g = random_unitriangular(4, rng)
    h = random_unitriangular(4, rng)
    x = Matrix.from_rows([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
    assert adjoint(g, adjoint(h, x)) == adjoint(g @ h, x)


def test_apply_elementary_matches_adjoint(rng):
    x = Matrix.from_rows([[rng.randint(-4, 4) for _ in range(4)] for _ in range(4)])
    t = Fraction(3, 2)
    expected = adjoint(elementary(4, 2, 4, t), x)
    mat = x.copy()
    apply_elementary(mat, 2, 4, t)
    assert mat == expected


def test_apply_row_op_left_multiplies(rng):
    x = Matrix.from_rows([[rng.randint(-4, 4) for _ in range(4)] for _ in range(4)])
    t = Fraction(-2, 3)
    expected = elementary(4, 1, 3, t) @ x
    mat = x.copy()
    apply_row_op(mat, 1, 3, t)
    assert mat == expected


def test_embed_and_corner_round_trip(rng):
    g = random_unitriangular(3, rng)
    big = embed_corner(g, 5)
    assert big.is_unitriangular()
    assert corner_of(big, 3) == g


def test_random_unitriangular_is_unitriangular(rng):
    for n in range(1, 6):
        assert random_unitriangular(n, rng).is_unitriangular()

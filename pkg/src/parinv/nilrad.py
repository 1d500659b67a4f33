"""Elements of the nilradical as exact matrices, plus random sampling."""

from __future__ import annotations

import random
from fractions import Fraction

from .blocks import BlockStructure, Root, roots_m
from .exceptions import SupportViolationError
from .linalg import Matrix, Scalar, ZERO


def support(mat: Matrix) -> set[Root]:
    """Positions of the nonzero entries."""
    return {
        (i, j)
        for i in range(1, mat.rows + 1)
        for j in range(1, mat.cols + 1)
        if mat.at(i, j) != ZERO
    }


def assert_in_nilradical(mat: Matrix, bs: BlockStructure) -> None:
    if mat.rows != bs.n or mat.cols != bs.n:
        raise SupportViolationError(
            f"matrix is {mat.rows}x{mat.cols}, structure needs {bs.n}x{bs.n}"
        )
    allowed = set(roots_m(bs))
    stray = support(mat) - allowed
    if stray:
        raise SupportViolationError(
            f"entries outside the nilradical at {sorted(stray)}"
        )


def from_entries(bs: BlockStructure, entries: dict[Root, Scalar]) -> Matrix:
    """Build a nilradical element from a position-to-value map."""
    mat = Matrix.zeros(bs.n, bs.n)
    for (i, j), value in entries.items():
        mat.set_at(i, j, value)
    assert_in_nilradical(mat, bs)
    return mat


def random_scalar(rng: random.Random, nonzero: bool = False) -> Scalar:
    num = rng.randint(-99, 99)
    while nonzero and num == 0:
        num = rng.randint(-99, 99)
    return Fraction(num, rng.randint(1, 9))


def random_nilrad(bs: BlockStructure, rng: random.Random, dense: bool = True) -> Matrix:
    """Random element of the nilradical.

    With dense=True every admitted position is filled, which keeps the base
    minors away from zero for almost every draw.
    """
    mat = Matrix.zeros(bs.n, bs.n)
    for (i, j) in roots_m(bs):
        if dense or rng.random() < 0.5:
            mat.set_at(i, j, random_scalar(rng))
    return mat

"""Conjugation by upper unitriangular matrices."""

from __future__ import annotations

import random

from .exceptions import BadIndexError, NotUnitriangularError
from .linalg import Matrix, Scalar, ZERO
from .nilrad import random_scalar


def elementary(n: int, i: int, j: int, t: Scalar) -> Matrix:
    """Identity plus t at the above-diagonal position (i, j)."""
    if not (1 <= i < j <= n):
        raise BadIndexError(f"({i}, {j}) is not above the diagonal of size {n}")
    mat = Matrix.identity(n)
    mat.set_at(i, j, t)
    return mat


def adjoint(g: Matrix, x: Matrix) -> Matrix:
    """g x g^{-1} for unitriangular g."""
    if not g.is_unitriangular():
        raise NotUnitriangularError("conjugating element must be unitriangular")
    return g @ x @ g.unitriangular_inverse()


def apply_elementary(mat: Matrix, i: int, j: int, t: Scalar) -> None:
    """Conjugate mat in place by the elementary element with t at (i, j).

    Equivalent to two sweeps: add t times row j to row i, then subtract
    t times column i from column j.
    """
    if not (1 <= i < j <= mat.rows):
        raise BadIndexError(f"({i}, {j}) is not above the diagonal")
    if t == ZERO:
        return
    for col in range(1, mat.cols + 1):
        value = mat.at(j, col)
        if value != ZERO:
            mat.set_at(i, col, mat.at(i, col) + t * value)
    for row in range(1, mat.rows + 1):
        value = mat.at(row, i)
        if value != ZERO:
            mat.set_at(row, j, mat.at(row, j) - t * value)


def apply_row_op(mat: Matrix, i: int, j: int, t: Scalar) -> None:
    """Left-multiply mat in place by the elementary element with t at (i, j)."""
    if not (1 <= i < j <= mat.rows):
        raise BadIndexError(f"({i}, {j}) is not above the diagonal")
    if t == ZERO:
        return
    for col in range(1, mat.cols + 1):
        value = mat.at(j, col)
        if value != ZERO:
            mat.set_at(i, col, mat.at(i, col) + t * value)


def embed_corner(g: Matrix, n: int) -> Matrix:
    """Extend a unitriangular matrix by identity rows up to size n."""
    if g.rows > n:
        raise BadIndexError(f"cannot embed size {g.rows} into size {n}")
    out = Matrix.identity(n)
    for i in range(1, g.rows + 1):
        for j in range(i + 1, g.cols + 1):
            value = g.at(i, j)
            if value != ZERO:
                out.set_at(i, j, value)
    return out


def corner_of(mat: Matrix, n: int) -> Matrix:
    """Leading n x n corner."""
    idx = tuple(range(1, n + 1))
    return mat.submatrix(idx, idx)


def random_unitriangular(n: int, rng: random.Random, fill: float = 0.7) -> Matrix:
    """Random unitriangular element; fill controls how many entries are set."""
    mat = Matrix.identity(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < fill:
                mat.set_at(i, j, random_scalar(rng))
    return mat

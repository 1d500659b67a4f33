"""Dense exact-rational matrices.

All public indices are 1-based, matching the root convention used across the
package.  Entries are `fractions.Fraction`, which already guarantees lowest
terms and a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .exceptions import (
    BadIndexError,
    NonSquareError,
    NotUnitriangularError,
    SizeMismatchError,
)

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_scalar(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc


def format_scalar(value: Fraction) -> str:
    """Format a rational as 'p/q', or 'p' when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Matrix:
    """A dense rows x cols matrix of Fractions."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list[list[Fraction]]):
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @classmethod
    def from_rows(cls, rows: list[list]) -> "Matrix":
        if not rows:
            return cls(0, 0, [])
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise SizeMismatchError("ragged row lengths")
        data = [[Fraction(x) for x in r] for r in rows]
        return cls(len(rows), width, data)

    def copy(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [row[:] for row in self.data])

    def at(self, i: int, j: int) -> Fraction:
        """Entry in row i, column j (1-based)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise BadIndexError(f"position ({i},{j}) outside {self.rows}x{self.cols}")
        return self.data[i - 1][j - 1]

    def set_at(self, i: int, j: int, value) -> None:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise BadIndexError(f"position ({i},{j}) outside {self.rows}x{self.cols}")
        self.data[i - 1][j - 1] = Fraction(value)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise SizeMismatchError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = Matrix.zeros(self.rows, other.cols)
        for i in range(self.rows):
            arow = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                a = arow[k]
                if a == 0:
                    continue
                brow = other.data[k]
                for j in range(other.cols):
                    if brow[j] != 0:
                        orow[j] += a * brow[j]
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise SizeMismatchError("shape mismatch in addition")
        return Matrix(
            self.rows,
            self.cols,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise SizeMismatchError("shape mismatch in subtraction")
        return Matrix(
            self.rows,
            self.cols,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def submatrix(self, row_idx: list[int], col_idx: list[int]) -> "Matrix":
        """Submatrix on 1-based index lists, which must be strictly increasing."""
        for idx, bound in ((row_idx, self.rows), (col_idx, self.cols)):
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise BadIndexError(f"index list {idx} not strictly increasing")
            if idx and not (1 <= idx[0] and idx[-1] <= bound):
                raise BadIndexError(f"index list {idx} outside range 1..{bound}")
        data = [[self.data[i - 1][j - 1] for j in col_idx] for i in row_idx]
        return Matrix(len(row_idx), len(col_idx), data)

    def minor(self, row_idx: list[int], col_idx: list[int]) -> Fraction:
        """Determinant of the submatrix on the given 1-based index lists."""
        if len(row_idx) != len(col_idx):
            raise SizeMismatchError("minor needs equally many rows and columns")
        return self.submatrix(row_idx, col_idx).det()

    def _integer_rows(self) -> tuple[list[list[int]], Fraction]:
        """Scale each row to integers; return rows and the product of scale factors."""
        scaled = []
        factor = ONE
        for row in self.data:
            mult = lcm(*(x.denominator for x in row)) if row else 1
            factor *= mult
            scaled.append([int(x * mult) for x in row])
        return scaled, factor

    def det(self) -> Fraction:
        """Exact determinant via fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise NonSquareError(f"determinant of {self.rows}x{self.cols} matrix")
        n = self.rows
        if n == 0:
            return ONE
        a, factor = self._integer_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            pivot = a[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = pivot
        return Fraction(sign * a[n - 1][n - 1]) / factor

    def rank(self) -> int:
        """Exact rank via fraction-free elimination on integer-scaled rows."""
        a, _ = self._integer_rows()
        rows, cols = self.rows, self.cols
        rank = 0
        row = 0
        for col in range(cols):
            pivot_row = None
            for i in range(row, rows):
                if a[i][col] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            a[row], a[pivot_row] = a[pivot_row], a[row]
            pivot = a[row][col]
            for i in range(row + 1, rows):
                if a[i][col] != 0:
                    factor = a[i][col]
                    a[i] = [pivot * x - factor * y for x, y in zip(a[i], a[row])]
            rank += 1
            row += 1
            if row == rows:
                break
        return rank

    def is_unitriangular(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            if self.data[i][i] != 1:
                return False
            for j in range(i):
                if self.data[i][j] != 0:
                    return False
        return True

    def unitriangular_inverse(self) -> "Matrix":
        """Exact inverse of an upper unitriangular matrix by back-substitution."""
        if not self.is_unitriangular():
            raise NotUnitriangularError("matrix is not upper unitriangular")
        n = self.rows
        inv = Matrix.identity(n)
        # solve self @ inv = E column by column, bottom row upward
        for j in range(n):
            for i in range(n - 1, -1, -1):
                acc = ONE if i == j else ZERO
                for k in range(i + 1, n):
                    if self.data[i][k] != 0:
                        acc -= self.data[i][k] * inv.data[k][j]
                inv.data[i][j] = acc
        return inv

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(format_scalar(x) for x in row) for row in self.data
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"


def solve_linear(a: Matrix, rhs: list[Fraction]) -> list[Fraction] | None:
    """One exact solution of a x = rhs, or None when the system is inconsistent.

    Underdetermined systems get free variables set to zero, so the result is
    deterministic for a fixed coefficient matrix.
    """
    if len(rhs) != a.rows:
        raise SizeMismatchError("right-hand side length does not match row count")
    rows = [row[:] + [b] for row, b in zip(a.data, rhs)]
    cols = a.cols
    pivot_col_of = []
    row = 0
    for col in range(cols):
        pivot_row = None
        for i in range(row, len(rows)):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[row], rows[pivot_row] = rows[pivot_row], rows[row]
        pivot = rows[row][col]
        rows[row] = [x / pivot for x in rows[row]]
        for i in range(len(rows)):
            if i != row and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[row])]
        pivot_col_of.append(col)
        row += 1
        if row == len(rows):
            break
    for i in range(row, len(rows)):
        if rows[i][cols] != 0:
            return None
    solution = [ZERO] * cols
    for i, col in enumerate(pivot_col_of):
        solution[col] = rows[i][cols]
    return solution


def det_permutation_sum(m: Matrix) -> Fraction:
    """Brute-force determinant as a signed sum over permutations.

    Exponential; used only as an independent oracle for small matrices.
    """
    if m.rows != m.cols:
        raise NonSquareError("determinant of a non-square matrix")
    n = m.rows
    total = ZERO

    def expand(row: int, used: int, sign: int, partial: Fraction):
        nonlocal total
        if row == n:
            total += sign * partial
            return
        for j in range(n):
            if used & (1 << j) or m.data[row][j] == 0:
                continue
            swaps = bin(used >> (j + 1)).count("1")
            expand(
                row + 1,
                used | (1 << j),
                -sign if swaps % 2 else sign,
                partial * m.data[row][j],
            )

    expand(0, 0, 1, ONE)
    return total

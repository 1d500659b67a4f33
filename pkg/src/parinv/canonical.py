"""Canonical orbit representatives and coefficient recovery.

A canonical point carries one coefficient per base root and one per derived
root.  pi_map recovers the coefficients by solving the generator values in
triangular order.  canonicalize_witness additionally certifies that the
resulting point lies in the orbit, by producing a group element whose
conjugation action provably carries the input onto the representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .action import adjoint
from .blocks import BaseData, Root, solving_order
from .exceptions import (
    DegenerateOrbitError,
    NotAMonomialError,
    SizeMismatchError,
    StructuralViolationError,
    ZeroBaseMinorError,
)
from .invariants import invariant_vector, minor_spec, pair_spec
from .linalg import Matrix, Scalar, ZERO, solve_linear
from .nilrad import assert_in_nilradical, support


@dataclass(frozen=True)
class CanonicalPoint:
    """Coefficients of a canonical representative, in row-column order."""

    sizes: tuple[int, ...]
    coeffs: tuple[tuple[Root, Scalar], ...]

    @classmethod
    def build(cls, bd: BaseData, values: Mapping[Root, Scalar]) -> "CanonicalPoint":
        roots = sorted(bd.base + bd.derived)
        stray = set(values) - set(roots)
        if stray:
            raise StructuralViolationError(f"coefficients at non-generator roots {sorted(stray)}")
        coeffs = tuple((root, values.get(root, ZERO)) for root in roots)
        return cls(bd.bs.sizes, coeffs)

    @classmethod
    def from_matrix(cls, bd: BaseData, mat: Matrix) -> "CanonicalPoint":
        allowed = bd.base_set | bd.derived_set
        for pos in support(mat):
            if pos not in allowed:
                raise StructuralViolationError(f"entry at {pos} outside the canonical support")
        for root in bd.base:
            if mat.at(*root) == ZERO:
                raise DegenerateOrbitError("canonical-support", root)
        return cls.build(bd, {root: mat.at(*root) for root in bd.base + bd.derived})

    def coeff(self, root: Root) -> Scalar:
        for other, value in self.coeffs:
            if other == root:
                return value
        raise KeyError(root)

    def matrix(self) -> Matrix:
        n = sum(self.sizes)
        mat = Matrix.zeros(n, n)
        for (i, j), value in self.coeffs:
            mat.set_at(i, j, value)
        return mat

    @property
    def zero_entries(self) -> tuple[Root, ...]:
        return tuple(root for root, value in self.coeffs if value == ZERO)


@dataclass(frozen=True)
class CanonicalizationResult:
    point: CanonicalPoint
    witness: Matrix
    zero_coefficients: tuple[Root, ...]


# ---------------------------------------------------------------------------
# coefficient recovery through the generator values

Monomial = tuple[tuple[Root, int], ...]
Poly = dict[Monomial, int]


def _det_poly(bd: BaseData, row_idx: tuple[int, ...], col_idx: tuple[int, ...]) -> Poly:
    """Determinant of a submatrix of a generic canonical point.

    Entries are independent variables at base and derived positions and zero
    elsewhere, so each nonzero expansion term corresponds to one system of
    distinct representatives and no two terms can merge or cancel.
    """
    allowed = bd.base_set | bd.derived_set
    k = len(row_idx)
    if k == 0:
        return {(): 1}
    per_row = [[c for c in range(k) if (i, col_idx[c]) in allowed] for i in row_idx]
    poly: Poly = {}
    chosen: list[int] = []
    used = [False] * k

    def place(p: int) -> None:
        if p == k:
            inversions = sum(
                1 for a in range(k) for b in range(a + 1, k) if chosen[a] > chosen[b]
            )
            roots = sorted((row_idx[a], col_idx[chosen[a]]) for a in range(k))
            poly[tuple((root, 1) for root in roots)] = -1 if inversions % 2 else 1
            return
        for c in per_row[p]:
            if not used[c]:
                used[c] = True
                chosen.append(c)
                place(p + 1)
                chosen.pop()
                used[c] = False

    place(0)
    return poly


def _mul_poly(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            merged = dict(k1)
            for root, e in k2:
                merged[root] = merged.get(root, 0) + e
            key = tuple(sorted(merged.items()))
            out[key] = out.get(key, 0) + c1 * c2
    return {key: coeff for key, coeff in out.items() if coeff != 0}


@dataclass(frozen=True)
class MonomialInfo:
    """Single expansion term of a generator on canonical points."""

    root: Root
    sign: int
    factors: tuple[tuple[Root, int], ...]


def _single_term(root: Root, poly: Poly, position: Mapping[Root, int]) -> MonomialInfo:
    if len(poly) != 1:
        raise NotAMonomialError(f"generator at {root} expands to {len(poly)} terms")
    ((key, coeff),) = poly.items()
    if coeff not in (1, -1):
        raise NotAMonomialError(f"generator at {root} has coefficient {coeff}")
    exponents = dict(key)
    if exponents.pop(root, 0) != 1:
        raise NotAMonomialError(f"generator at {root} is not linear in its own coefficient")
    for other in exponents:
        if position[other] >= position[root]:
            raise NotAMonomialError(f"generator at {root} depends on a later coefficient {other}")
    return MonomialInfo(root, coeff, tuple(sorted(exponents.items())))


@lru_cache(maxsize=None)
def monomial_table(bd: BaseData) -> Mapping[Root, MonomialInfo]:
    """Expansion of every generator on canonical points, one term each."""
    position = {root: idx for idx, root in enumerate(solving_order(bd))}
    table: dict[Root, MonomialInfo] = {}
    for root in bd.base:
        spec = minor_spec(bd, root)
        table[root] = _single_term(root, _det_poly(bd, spec.row_idx, spec.col_idx), position)
    for pair in bd.pairs:
        total: Poly = {}
        for left, right in pair_spec(bd, pair).terms:
            term = _mul_poly(
                _det_poly(bd, left.row_idx, left.col_idx),
                _det_poly(bd, right.row_idx, right.col_idx),
            )
            for key, coeff in term.items():
                total[key] = total.get(key, 0) + coeff
        total = {key: coeff for key, coeff in total.items() if coeff != 0}
        root = pair.derived_root
        table[root] = _single_term(root, total, position)
    return MappingProxyType(table)


def pi_map(bd: BaseData, mat: Matrix) -> CanonicalPoint:
    """Canonical point with the same generator values as mat."""
    assert_in_nilradical(mat, bd.bs)
    values = invariant_vector(bd, mat)
    table = monomial_table(bd)
    solved: dict[Root, Scalar] = {}
    for root in solving_order(bd):
        info = table[root]
        value = values[root]
        if root in bd.base_set and value == ZERO:
            raise ZeroBaseMinorError(f"base minor at {root} vanishes")
        denom = Scalar(info.sign)
        for other, e in info.factors:
            denom *= solved[other] ** e
        solved[root] = value / denom
    return CanonicalPoint.build(bd, solved)


# ---------------------------------------------------------------------------
# conjugation onto the representative


def intertwiner(x: Matrix, y: Matrix) -> Matrix | None:
    """Upper unitriangular g with g x g^-1 = y, or None when none exists.

    For unitriangular g the conjugation condition is equivalent to
    g x = y g, which is linear in the above-diagonal entries of g.  Entry
    (a, b) of g x - y g only involves unknowns g(a, k) and g(k, b) with
    a < k < b, so the system is assembled position by position and solved
    exactly.  Free unknowns are set to zero, making the witness
    deterministic.
    """
    n = x.rows
    positions = [(a, b) for a in range(1, n) for b in range(a + 1, n + 1)]
    index = {pos: k for k, pos in enumerate(positions)}
    rows = []
    rhs = []
    for a, b in positions:
        row = [ZERO] * len(positions)
        for k in range(a + 1, b):
            row[index[(a, k)]] += x.at(k, b)
            row[index[(k, b)]] -= y.at(a, k)
        rows.append(row)
        rhs.append(y.at(a, b) - x.at(a, b))
    solution = solve_linear(Matrix(len(rows), len(positions), rows), rhs)
    if solution is None:
        return None
    g = Matrix.identity(n)
    for pos, value in zip(positions, solution):
        g.set_at(*pos, value)
    return g


def canonicalize_witness(bd: BaseData, x: Matrix) -> CanonicalizationResult:
    """Canonical representative of the orbit of x and an element reaching it.

    The representative is recovered from the generator values, then a group
    element conjugating x onto it is found as an exact solution of the
    intertwining equation.  The witness certifies, independently of the
    coefficient solve, that the representative really lies in the orbit.
    Raises DegenerateOrbitError when the orbit does not meet the dense
    coordinate chart.
    """
    assert_in_nilradical(x, bd.bs)
    try:
        point = pi_map(bd, x)
    except ZeroBaseMinorError as exc:
        raise DegenerateOrbitError("base-minor") from exc
    y = point.matrix()
    g = intertwiner(x, y)
    if g is None:
        raise DegenerateOrbitError("witness")
    if adjoint(g, x) != y:
        raise StructuralViolationError("witness verification failed")
    return CanonicalizationResult(point, g, point.zero_entries)


def uniqueness_probe(bd: BaseData, y1: CanonicalPoint, y2: CanonicalPoint) -> bool:
    """True when the two points share every generator value.

    On points with all coefficients nonzero, equal generator values force
    equal coefficients, because the triangular monomial solve inverts one
    into the other; a counterexample is raised, not returned.
    """
    if y1.sizes != y2.sizes:
        raise SizeMismatchError("uniqueness probe across different block structures")
    same_values = invariant_vector(bd, y1.matrix()) == invariant_vector(bd, y2.matrix())
    if same_values and y1 != y2 and not (y1.zero_entries or y2.zero_entries):
        raise StructuralViolationError("equal generator values on distinct points")
    return same_values

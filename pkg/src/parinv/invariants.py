"""Minor invariants of the unipotent action on the nilradical.

To each nilradical position gamma a determinant M_gamma is attached; the base
roots and the derived roots of admissible pairs together give a full system of
invariant generators.  The derived generator of a pair is a sum of products of
two such determinants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import AdmissiblePair, BaseData, Root
from .linalg import Matrix, Scalar, ZERO

InvariantVector = dict[Root, Scalar]


@dataclass(frozen=True)
class MinorSpec:
    """Row and column sets of the determinant attached to a position."""

    root: Root
    row_idx: tuple[int, ...]
    col_idx: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.row_idx)


def minor_spec(bd: BaseData, gamma: Root) -> MinorSpec:
    """Determinant attached to gamma = (a, b).

    Rows are a together with the rows of base roots strictly inside the
    lower-left quadrant of gamma; columns are b together with their columns.
    """
    a, b = gamma
    inner = [root for root in bd.base if root[0] > a and root[1] < b]
    rows = tuple(sorted({a} | {root[0] for root in inner}))
    cols = tuple(sorted({b} | {root[1] for root in inner}))
    return MinorSpec(gamma, rows, cols)


@dataclass(frozen=True)
class PairSpec:
    """Derived generator of an admissible pair: a sum of two-minor products."""

    pair: AdmissiblePair
    terms: tuple[tuple[MinorSpec, MinorSpec], ...]

    @property
    def root(self) -> Root:
        return self.pair.derived_root


def pair_spec(bd: BaseData, pair: AdmissiblePair) -> PairSpec:
    a, b = pair.first
    c, d = pair.second
    terms = tuple(
        (minor_spec(bd, (a, t)), minor_spec(bd, (t, d))) for t in range(b, c + 1)
    )
    return PairSpec(pair, terms)


def eval_minor(mat: Matrix, spec: MinorSpec) -> Scalar:
    return mat.minor(list(spec.row_idx), list(spec.col_idx))


def eval_pair(mat: Matrix, spec: PairSpec) -> Scalar:
    total = ZERO
    for left, right in spec.terms:
        total += eval_minor(mat, left) * eval_minor(mat, right)
    return total


def invariant_vector(bd: BaseData, mat: Matrix) -> InvariantVector:
    """Values of all generators at mat, keyed by root, base roots first."""
    values: InvariantVector = {}
    for root in bd.base:
        values[root] = eval_minor(mat, minor_spec(bd, root))
    for pair in bd.pairs:
        values[pair.derived_root] = eval_pair(mat, pair_spec(bd, pair))
    return values


def _minor_gradient(mat: Matrix, spec: MinorSpec) -> dict[Root, Scalar]:
    """Partial derivatives of the determinant with respect to the matrix entries.

    Only positions inside the row-and-column window can contribute; each
    partial is a signed complementary determinant.
    """
    grad: dict[Root, Scalar] = {}
    for r, u in enumerate(spec.row_idx, start=1):
        sub_rows = tuple(x for x in spec.row_idx if x != u)
        for c, v in enumerate(spec.col_idx, start=1):
            sub_cols = tuple(x for x in spec.col_idx if x != v)
            cof = mat.minor(list(sub_rows), list(sub_cols))
            if (r + c) % 2 == 1:
                cof = -cof
            if cof != ZERO:
                grad[(u, v)] = grad.get((u, v), ZERO) + cof
    return grad


def _pair_gradient(mat: Matrix, spec: PairSpec) -> dict[Root, Scalar]:
    grad: dict[Root, Scalar] = {}
    for left, right in spec.terms:
        left_val = eval_minor(mat, left)
        right_val = eval_minor(mat, right)
        for pos, part in _minor_gradient(mat, left).items():
            grad[pos] = grad.get(pos, ZERO) + part * right_val
        for pos, part in _minor_gradient(mat, right).items():
            grad[pos] = grad.get(pos, ZERO) + left_val * part
    return grad


def jacobian_rank(bd: BaseData, mat: Matrix) -> int:
    """Rank at mat of the generator family, as functions of the nilradical entries."""
    coords = {pos: k for k, pos in enumerate(bd.m_roots)}
    gradients: list[dict[Root, Scalar]] = []
    for root in bd.base:
        gradients.append(_minor_gradient(mat, minor_spec(bd, root)))
    for pair in bd.pairs:
        gradients.append(_pair_gradient(mat, pair_spec(bd, pair)))
    jac = Matrix.zeros(len(gradients), len(coords))
    for r, grad in enumerate(gradients, start=1):
        for pos, value in grad.items():
            if pos in coords:
                jac.set_at(r, coords[pos] + 1, value)
    return jac.rank()


def tangent_rank(bd: BaseData, mat: Matrix) -> int:
    """Dimension of the orbit of mat: rank of u -> u*mat - mat*u.

    u runs over the strictly upper triangular matrices; the commutator lands
    in the nilradical, whose positions index the rows.
    """
    n = bd.bs.n
    coords = {pos: k for k, pos in enumerate(bd.m_roots)}
    cols = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    tangent = Matrix.zeros(len(coords), len(cols))
    for k, (u, v) in enumerate(cols, start=1):
        for (i, j), r in coords.items():
            value = ZERO
            if i == u:
                value += mat.at(v, j)
            if j == v:
                value -= mat.at(i, u)
            if value != ZERO:
                tangent.set_at(r + 1, k, value)
    return tangent.rank()


def orbit_dim_bound(bd: BaseData) -> int:
    return len(bd.m_roots) - len(bd.base) - len(bd.derived)

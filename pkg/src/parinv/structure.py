"""Root sets tied to the last column: the ladder anchor, chain-linked roots,
principal minors, absorbable positions, and the reduced shape they cut out.

Everything here assumes the base has a root in the last column; the functions
raise AnchorMissingError otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .blocks import BaseData, Root
from .exceptions import AnchorMissingError, StructuralViolationError
from .linalg import Matrix, ZERO


@dataclass(frozen=True)
class AnchorData:
    """Ladder of base roots ending in the last column.

    anchor_row is the row of the base root in column n; top_row is the least
    row holding a base or derived root in column n.  The ladder lists the r
    base roots in rows anchor_row .. anchor_row+r-1 from the bottom up, so
    their columns increase and the last one is column n.
    """

    anchor_row: int
    top_row: int
    size: int
    ladder: tuple[Root, ...]
    cols: tuple[int, ...]


@lru_cache(maxsize=None)
def last_column_anchor(bd: BaseData) -> AnchorData | None:
    n = bd.bs.n
    anchor = bd.col_base_root(n)
    if anchor is None:
        return None
    anchor_row = anchor[0]
    size = bd.bs.sizes[-1]
    ladder = []
    for i in range(anchor_row + size - 1, anchor_row - 1, -1):
        root = bd.row_base_root(i)
        if root is None:
            raise StructuralViolationError(f"no base root in ladder row {i}")
        ladder.append(root)
    cols = tuple(root[1] for root in ladder)
    if list(cols) != sorted(cols) or cols[-1] != n:
        raise StructuralViolationError(f"ladder columns {cols} out of order")
    top_row = min(
        root[0] for root in set(bd.base) | set(bd.derived) if root[1] == n
    )
    return AnchorData(anchor_row, top_row, size, tuple(ladder), cols)


def require_anchor(bd: BaseData) -> AnchorData:
    anchor = last_column_anchor(bd)
    if anchor is None:
        raise AnchorMissingError(
            f"no base root in the last column for blocks {bd.bs.sizes}"
        )
    return anchor


@lru_cache(maxsize=None)
def chain_roots(bd: BaseData) -> frozenset[Root]:
    """Base and derived roots chained, head to tail, through the anchor ladder.

    A chain is a sequence of roots in which each column equals the next row.
    Only roots whose row offset inside blocks 2..s stays within the last block
    size may appear.  The result collects every admissible root lying on a
    chain through the rectangle spanned by the ladder columns and the rows
    top_row .. top_row+r-1.
    """
    anchor = require_anchor(bd)
    bounds = bd.bs.boundaries
    size = anchor.size

    def admissible(root: Root) -> bool:
        k = bd.bs.block_of(root[0]) - 1
        return k == 0 or root[0] <= size + bounds[k]

    nodes = [root for root in set(bd.base) | set(bd.derived) if admissible(root)]
    seed_rows = range(anchor.top_row, anchor.top_row + size)
    seeds = {
        root for root in nodes if root[0] in seed_rows and root[1] in anchor.cols
    }

    by_row: dict[int, list[Root]] = {}
    by_col: dict[int, list[Root]] = {}
    for root in nodes:
        by_row.setdefault(root[0], []).append(root)
        by_col.setdefault(root[1], []).append(root)

    # A chain is a directed path, so a root lies on a chain through the seed
    # rectangle exactly when some seed is reachable from it or vice versa.
    def closure(step) -> set[Root]:
        reached = set(seeds)
        stack = list(seeds)
        while stack:
            root = stack.pop()
            for nxt in step(root):
                if nxt not in reached:
                    reached.add(nxt)
                    stack.append(nxt)
        return reached

    down = closure(lambda root: by_row.get(root[1], []))
    up = closure(lambda root: by_col.get(root[0], []))
    return frozenset(down | up)


@dataclass(frozen=True)
class PrincipalMinor:
    block: int
    row_idx: tuple[int, ...]
    col_idx: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.row_idx)

    def contains(self, root: Root) -> bool:
        return root[0] in self.row_idx and root[1] in self.col_idx


@lru_cache(maxsize=None)
def principal_minors(bd: BaseData) -> tuple[PrincipalMinor, ...]:
    """One minor per block except the last.

    The columns are where the chain roots of the block sit beyond the block;
    the rows are the first min(r, r_k) rows of the block.
    """
    anchor = require_anchor(bd)
    chain = chain_roots(bd)
    bounds = bd.bs.boundaries
    minors = []
    used_rows: set[int] = set()
    used_cols: set[int] = set()
    for k in range(1, bd.bs.s):
        trimmed = min(anchor.size, bd.bs.sizes[k - 1])
        rows = tuple(range(bounds[k - 1] + 1, bounds[k - 1] + trimmed + 1))
        cols = tuple(
            sorted(
                {
                    j
                    for (i, j) in chain
                    if bounds[k - 1] < i <= bounds[k] and j > bounds[k]
                }
            )
        )
        if len(cols) != trimmed:
            raise StructuralViolationError(
                f"block {k} of {bd.bs.sizes}: {len(cols)} chain columns, "
                f"expected {trimmed}"
            )
        if used_rows & set(rows) or used_cols & set(cols):
            raise StructuralViolationError(
                f"principal minors of {bd.bs.sizes} overlap at block {k}"
            )
        used_rows.update(rows)
        used_cols.update(cols)
        minors.append(PrincipalMinor(k, rows, cols))
    return tuple(minors)


@lru_cache(maxsize=None)
def absorbable_roots(bd: BaseData) -> frozenset[Root]:
    """Positions whose entries can be conjugated away against a chain root below.

    These are the nilradical positions with a chain root lower in the column
    while their own row carries no chain root at all.
    """
    chain = chain_roots(bd)
    chain_rows = {root[0] for root in chain}
    result = set()
    for i, j in bd.m_roots:
        if i in chain_rows:
            continue
        if any(row > i for (row, col) in chain if col == j):
            result.add((i, j))
    return frozenset(result)


@lru_cache(maxsize=None)
def reduced_form_constraints(bd: BaseData) -> tuple[frozenset[Root], frozenset[Root]]:
    """Zero and nonzero patterns of the reduced shape.

    Returns (forced_zero, required_nonzero).  A matrix in reduced shape has
    principal minors that vanish strictly below their secondary diagonal and
    not on it, vanishes right of the last chain root of each chain row, and
    vanishes at non-chain gaps between minor columns whenever the column
    closing the gap meets the row below the secondary diagonal.
    """
    chain = chain_roots(bd)
    minors = principal_minors(bd)
    forced: set[Root] = set()
    required: set[Root] = set()

    for pm in minors:
        for p, i in enumerate(pm.row_idx, start=1):
            for q, j in enumerate(pm.col_idx, start=1):
                if p + q > pm.size + 1:
                    forced.add((i, j))
                elif p + q == pm.size + 1:
                    required.add((i, j))

    last_chain_col = {}
    for i, j in chain:
        last_chain_col[i] = max(j, last_chain_col.get(i, 0))
    for i, j in bd.m_roots:
        if i in last_chain_col and j > last_chain_col[i]:
            forced.add((i, j))

    for pm in minors:
        for p, i in enumerate(pm.row_idx, start=1):
            for q in range(2, pm.size + 1):
                if p + q <= pm.size + 1:
                    continue
                for j in range(pm.col_idx[q - 2] + 1, pm.col_idx[q - 1]):
                    if (i, j) in bd.m_set and (i, j) not in chain:
                        forced.add((i, j))

    if forced & required:
        raise StructuralViolationError(
            f"contradictory reduced shape for {bd.bs.sizes}"
        )
    return frozenset(forced), frozenset(required)


def in_reduced_form(bd: BaseData, mat: Matrix) -> bool:
    forced, required = reduced_form_constraints(bd)
    if any(mat.at(i, j) != ZERO for (i, j) in forced):
        return False
    return all(mat.at(i, j) != ZERO for (i, j) in required)


@dataclass(frozen=True)
class ShapeReport:
    """Outcome of a reduced-shape membership test.

    When ok is False, condition tells which requirement broke first (1 =
    minor anti-triangularity, 2 = zeros right of the last chain root of a
    row, 3 = zeros in gaps between minor columns) and position points at the
    offending entry.
    """

    ok: bool
    condition: int | None = None
    position: Root | None = None


def x_membership(bd: BaseData, mat: Matrix) -> ShapeReport:
    """Reduced-shape membership with the first violated condition, if any."""
    chain = chain_roots(bd)
    for pm in principal_minors(bd):
        for p, i in enumerate(pm.row_idx, start=1):
            for q, j in enumerate(pm.col_idx, start=1):
                if p + q > pm.size + 1 and mat.at(i, j) != ZERO:
                    return ShapeReport(False, 1, (i, j))
                if p + q == pm.size + 1 and mat.at(i, j) == ZERO:
                    return ShapeReport(False, 1, (i, j))
    last_chain_col: dict[int, int] = {}
    for i, j in chain:
        last_chain_col[i] = max(j, last_chain_col.get(i, 0))
    for i, j in sorted(bd.m_roots):
        if i in last_chain_col and j > last_chain_col[i] and mat.at(i, j) != ZERO:
            return ShapeReport(False, 2, (i, j))
    for pm in principal_minors(bd):
        for p, i in enumerate(pm.row_idx, start=1):
            for q in range(2, pm.size + 1):
                if p + q <= pm.size + 1:
                    continue
                for j in range(pm.col_idx[q - 2] + 1, pm.col_idx[q - 1]):
                    if (i, j) in bd.m_set and (i, j) not in chain and mat.at(i, j) != ZERO:
                        return ShapeReport(False, 3, (i, j))
    return ShapeReport(True)

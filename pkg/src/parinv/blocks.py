"""Block structures on gl(n) and the combinatorics of the nilradical positions.

A block structure is an ordered composition (r_1, ..., r_s) of n.  Positions
are 1-based pairs (i, j); the nilradical support M consists of the positions
strictly above the block diagonal, and the reductive-part roots are the
above-diagonal positions inside a block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exceptions import StructuralViolationError

Root = tuple[int, int]


def parse_blocks(text: str) -> "BlockStructure":
    """Parse a composition such as '1,3,2,1,3,2,2'."""
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad block list {text!r}") from exc
    return BlockStructure(sizes)


@dataclass(frozen=True)
class BlockStructure:
    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or any(r < 1 for r in self.sizes):
            raise ValueError(f"block sizes must be positive, got {self.sizes}")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def s(self) -> int:
        return len(self.sizes)

    @property
    def boundaries(self) -> tuple[int, ...]:
        """Partial sums R_0 = 0, R_1, ..., R_s = n."""
        acc = [0]
        for r in self.sizes:
            acc.append(acc[-1] + r)
        return tuple(acc)

    def block_of(self, i: int) -> int:
        """1-based block index containing row/column i."""
        if not (1 <= i <= self.n):
            raise ValueError(f"index {i} outside 1..{self.n}")
        bounds = self.boundaries
        for k in range(1, self.s + 1):
            if i <= bounds[k]:
                return k
        raise AssertionError("unreachable")

    def block_rows(self, k: int) -> range:
        """Row range of block k (1-based, inclusive ends)."""
        bounds = self.boundaries
        return range(bounds[k - 1] + 1, bounds[k] + 1)

    def shrink_last(self) -> "BlockStructure":
        """Block structure of the upper-left (n-1) x (n-1) corner."""
        if self.n == 1:
            raise ValueError("cannot shrink a 1x1 structure")
        if self.sizes[-1] == 1:
            return BlockStructure(self.sizes[:-1])
        return BlockStructure(self.sizes[:-1] + (self.sizes[-1] - 1,))


def roots_m(bs: BlockStructure) -> list[Root]:
    """Positions of the nilradical, sorted by (row, col)."""
    blk = _block_lookup(bs)
    return [
        (i, j)
        for i in range(1, bs.n + 1)
        for j in range(i + 1, bs.n + 1)
        if blk[i] < blk[j]
    ]


def delta_r_plus(bs: BlockStructure) -> list[Root]:
    """Above-diagonal positions inside the diagonal blocks, sorted by (row, col)."""
    blk = _block_lookup(bs)
    return [
        (i, j)
        for i in range(1, bs.n + 1)
        for j in range(i + 1, bs.n + 1)
        if blk[i] == blk[j]
    ]


def _block_lookup(bs: BlockStructure) -> list[int]:
    """blk[i] = block index of i, for i in 1..n (index 0 unused)."""
    blk = [0] * (bs.n + 1)
    for k in range(1, bs.s + 1):
        for i in bs.block_rows(k):
            blk[i] = k
    return blk


def dominates(gamma: Root, xi: Root) -> bool:
    """True when gamma - xi is a positive root of gl(n).

    Equivalently: same row with xi strictly left, or same column with xi
    strictly below.
    """
    if gamma == xi:
        return False
    return (gamma[0] == xi[0] and xi[1] < gamma[1]) or (
        gamma[1] == xi[1] and xi[0] > gamma[0]
    )


@dataclass(frozen=True)
class AdmissiblePair:
    """Base roots (a, b) and (c, d) whose gap (b, c) is a block-internal root."""

    first: Root
    second: Root

    @property
    def gap(self) -> Root:
        return (self.first[1], self.second[0])

    @property
    def derived_root(self) -> Root:
        """The sum of the pair and its gap, a new nilradical position (b, d)."""
        return (self.first[1], self.second[1])


@dataclass(frozen=True)
class BaseData:
    bs: BlockStructure
    m_roots: tuple[Root, ...]
    base: tuple[Root, ...]
    pairs: tuple[AdmissiblePair, ...]
    derived: tuple[Root, ...]
    m_set: frozenset[Root] = field(repr=False)
    base_set: frozenset[Root] = field(repr=False)
    derived_set: frozenset[Root] = field(repr=False)

    def row_base_root(self, i: int) -> Root | None:
        """The base root in row i, if any."""
        for root in self.base:
            if root[0] == i:
                return root
        return None

    def col_base_root(self, j: int) -> Root | None:
        """The base root in column j, if any."""
        for root in self.base:
            if root[1] == j:
                return root
        return None


def compute_base(bs: BlockStructure) -> tuple[Root, ...]:
    """Base of the nilradical by iterated extraction of minimal positions.

    Repeatedly take the minimal elements of what remains, then discard them
    together with every position dominating one of them.
    """
    remaining = set(roots_m(bs))
    base: list[Root] = []
    while remaining:
        minimal = [
            g for g in remaining if not any(dominates(g, x) for x in remaining if x != g)
        ]
        base.extend(minimal)
        dropped = set(minimal)
        for g in remaining:
            if any(dominates(g, m) for m in minimal):
                dropped.add(g)
        remaining -= dropped
    return tuple(sorted(base))


def admissible_pairs(bs: BlockStructure, base: tuple[Root, ...]) -> tuple[AdmissiblePair, ...]:
    """All ordered pairs of base roots whose column-to-row gap is block-internal."""
    blk = _block_lookup(bs)
    pairs = [
        AdmissiblePair(left, right)
        for left in base
        for right in base
        if left[1] < right[0] and blk[left[1]] == blk[right[0]]
    ]
    pairs.sort(key=lambda q: (q.first, q.second))
    return tuple(pairs)


@lru_cache(maxsize=None)
def base_data(bs: BlockStructure) -> BaseData:
    """Base, admissible pairs and derived roots for a block structure, cached."""
    m_roots = tuple(roots_m(bs))
    base = compute_base(bs)
    rows = [r[0] for r in base]
    cols = [r[1] for r in base]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise StructuralViolationError(f"base of {bs.sizes} repeats a row or column")
    pairs = admissible_pairs(bs, base)
    derived = tuple(sorted(q.derived_root for q in pairs))
    if len(set(derived)) != len(derived):
        raise StructuralViolationError(
            f"admissible pairs of {bs.sizes} do not determine distinct derived roots"
        )
    if set(derived) & set(base):
        raise StructuralViolationError(f"derived roots of {bs.sizes} meet the base")
    return BaseData(
        bs=bs,
        m_roots=m_roots,
        base=base,
        pairs=pairs,
        derived=derived,
        m_set=frozenset(m_roots),
        base_set=frozenset(base),
        derived_set=frozenset(derived),
    )


def order_lt(a: Root, b: Root, bd: BaseData) -> bool:
    """Strict solving order on the base and derived roots.

    Every base root precedes every derived root.  Within each family, roots
    lower in the matrix come first; ties in the row break by column.
    """
    if a == b:
        return False
    a_base, b_base = a in bd.base_set, b in bd.base_set
    if a_base and not b_base:
        return True
    if b_base and not a_base:
        return False
    if b[0] < a[0]:
        return True
    return b[0] == a[0] and a[1] < b[1]


def solving_order(bd: BaseData) -> list[Root]:
    """Base and derived roots sorted so that earlier roots can be solved first."""
    return sorted(
        bd.base + bd.derived,
        key=lambda root: (root in bd.derived_set, -root[0], root[1]),
    )

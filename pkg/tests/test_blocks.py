"""Block structure combinatorics: base, admissible pairs, orderings."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parinv import (
    BlockStructure,
    base_data,
    compute_base,
    dominates,
    order_lt,
    parse_blocks,
    roots_m,
    solving_order,
)

compositions = st.lists(st.integers(1, 4), min_size=1, max_size=5)


def test_parse_blocks():
    assert parse_blocks("1,3,2").sizes == (1, 3, 2)
    with pytest.raises(ValueError):
        parse_blocks("1,x")
    with pytest.raises(ValueError):
        parse_blocks("1,0,2")


def test_boundaries_and_block_of():
    bs = BlockStructure((1, 3, 2))
    assert bs.n == 6
    assert bs.boundaries == (0, 1, 4, 6)
    assert [bs.block_of(i) for i in range(1, 7)] == [1, 2, 2, 2, 3, 3]


def test_roots_m_counts_cross_block_positions():
    bs = BlockStructure((2, 3))
    roots = set(roots_m(bs))
    assert roots == {(i, j) for i in (1, 2) for j in (3, 4, 5)}


def test_dominates_directions():
    assert dominates((2, 10), (2, 6))
    assert dominates((2, 10), (5, 10))
    assert not dominates((2, 6), (2, 10))
    assert not dominates((2, 10), (3, 6))
    assert not dominates((2, 10), (2, 10))


def test_base_large_fixture_a(example_a):
    assert set(example_a.base) == {
        (1, 2), (2, 10), (3, 6), (4, 5), (5, 9), (6, 7),
        (7, 8), (9, 12), (10, 11), (11, 14), (12, 13),
    }
    assert set(example_a.derived) == {
        (2, 5), (2, 6), (5, 7), (8, 11), (8, 12), (9, 11), (11, 13),
    }


def test_base_large_fixture_b(example_b):
    assert set(example_b.base) == {
        (1, 4), (2, 3), (3, 7), (4, 5), (5, 6), (6, 14),
        (7, 10), (8, 9), (9, 13), (10, 11), (11, 12),
    }
    assert set(example_b.derived) == {(3, 5), (6, 9), (6, 10), (7, 9), (9, 11)}


def test_base_medium_fixture(example_c):
    assert set(example_c.base) == {(1, 2), (2, 3), (5, 8), (6, 7)}
    assert set(example_c.derived) == {(3, 7), (3, 8)}


def test_borel_base_is_staircase():
    for n in range(2, 8):
        bd = base_data(BlockStructure((1,) * n))
        assert bd.base == tuple((i, i + 1) for i in range(1, n))
        assert bd.derived == ()


def test_pair_geometry(example_a):
    for pair in example_a.pairs:
        (a, b), (c, d) = pair.first, pair.second
        assert b < c
        assert example_a.bs.block_of(b) == example_a.bs.block_of(c)
        assert pair.gap == (b, c)
        assert pair.derived_root == (b, d)
    assert len(example_a.pairs) == len(example_a.derived) == 7


def test_row_and_column_lookups(example_a):
    assert example_a.row_base_root(2) == (2, 10)
    assert example_a.col_base_root(10) == (2, 10)
    assert example_a.row_base_root(8) is None


def test_solving_order_is_strictly_sorted(example_a, example_b):
    for bd in (example_a, example_b):
        order = solving_order(bd)
        assert sorted(order) == sorted(bd.base + bd.derived)
        for earlier, later in zip(order, order[1:]):
            assert order_lt(earlier, later, bd)
            assert not order_lt(later, earlier, bd)


def test_solving_order_puts_base_first(example_a):
    order = solving_order(example_a)
    kinds = [root in example_a.base_set for root in order]
    assert kinds == sorted(kinds, reverse=True)


@settings(max_examples=60, deadline=None)
@given(compositions)
def test_base_is_antichain_and_covers(sizes):
    bd = base_data(BlockStructure(tuple(sizes)))
    base = set(bd.base)
    for xi in base:
        for gamma in base:
            assert not dominates(gamma, xi)
    rows = [root[0] for root in bd.base]
    cols = [root[1] for root in bd.base]
    assert len(rows) == len(set(rows))
    assert len(cols) == len(set(cols))
    for pos in roots_m(bd.bs):
        assert pos in base or any(dominates(pos, xi) for xi in base)


@settings(max_examples=60, deadline=None)
@given(compositions)
def test_recomputing_base_is_stable(sizes):
    bs = BlockStructure(tuple(sizes))
    assert compute_base(bs) == compute_base(bs)
    assert set(compute_base(bs)) <= set(roots_m(bs))

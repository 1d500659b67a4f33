"""Wire model converters."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from parinv import BlockStructure, Matrix, base_data, canonicalize_witness, from_entries
from parinv.exceptions import SupportViolationError
from parinv.schemas import CanonicalPointFile, Entry, GroupElement, MatrixFile


def test_entry_validates_rationals():
    assert Entry(i=1, j=2, value="-7/4").value == "-7/4"
    with pytest.raises(ValidationError):
        Entry(i=1, j=2, value="x")
    with pytest.raises(ValidationError):
        Entry(i=0, j=2, value="1")


def test_matrix_file_round_trip():
    bs = BlockStructure((2, 1))
    mat = from_entries(bs, {(1, 3): Fraction(7), (2, 3): Fraction(-3, 4)})
    model = MatrixFile.from_matrix(bs, mat)
    assert model.blocks == [2, 1]
    assert model.matrix() == mat
    assert model.structure() == bs


def test_matrix_file_rejects_duplicates_and_stray_support():
    dup = MatrixFile(blocks=[2, 1], entries=[
        Entry(i=1, j=3, value="1"), Entry(i=1, j=3, value="2"),
    ])
    with pytest.raises(ValueError):
        dup.matrix()
    stray = MatrixFile(blocks=[2, 1], entries=[Entry(i=2, j=1, value="1")])
    with pytest.raises(SupportViolationError):
        stray.matrix()


def test_group_element_round_trip():
    g = Matrix.identity(3)
    g.set_at(1, 2, Fraction(-7, 4))
    model = GroupElement.from_matrix(g)
    assert model.n == 3
    assert model.matrix() == g
    bad = GroupElement(n=3, entries=[Entry(i=2, j=2, value="1")])
    with pytest.raises(ValueError):
        bad.matrix()


def test_canonical_point_file_lists_every_generator():
    bd = base_data(BlockStructure((1, 2, 1)))
    x = from_entries(bd.bs, {
        (1, 2): Fraction(1), (2, 4): Fraction(1),
        (1, 3): Fraction(1), (3, 4): Fraction(-1),
    })
    point = canonicalize_witness(bd, x).point
    model = CanonicalPointFile.from_point(point)
    assert [(e.i, e.j) for e in model.coeffs] == [(1, 2), (2, 4), (3, 4)]
    assert model.coeffs[1].value == "0"

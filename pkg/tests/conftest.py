"""Shared fixtures: the worked block structures used across the tests."""

import random

import pytest

from parinv import BlockStructure, base_data

EXAMPLE_A = (1, 3, 2, 1, 3, 2, 2)
EXAMPLE_B = (2, 2, 1, 3, 2, 1, 3)
EXAMPLE_C = (1, 1, 4, 2)


@pytest.fixture(scope="session")
def example_a():
    return base_data(BlockStructure(EXAMPLE_A))


@pytest.fixture(scope="session")
def example_b():
    return base_data(BlockStructure(EXAMPLE_B))


@pytest.fixture(scope="session")
def example_c():
    return base_data(BlockStructure(EXAMPLE_C))


@pytest.fixture()
def rng():
    return random.Random(20260824)

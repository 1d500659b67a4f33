"""Smoke coverage for the randomized check suites."""

import json

import pytest

from parinv import run_suites, sweep_rows
from parinv.verify import SUITES, compositions, trial_rng


def test_compositions_count_and_order():
    rows = list(compositions(4))
    assert len(rows) == 8
    assert rows[0] == (1, 1, 1, 1)
    assert rows == sorted(rows)


def test_trial_rng_is_deterministic():
    a = trial_rng(7, "check", (2, 1), 3)
    b = trial_rng(7, "check", (2, 1), 3)
    assert [a.random() for _ in range(5)] == [b.random() for _ in range(5)]
    c = trial_rng(7, "check", (2, 1), 4)
    assert a.random() != c.random()


def test_combinatorics_suite_passes():
    report = run_suites(("combinatorics",), max_n=4, trials=2, seed=1)
    assert report.ok
    names = [check.name for check in report.checks]
    assert "example-fixtures" in names
    assert names == sorted(names)


def test_all_suites_pass_quickly():
    report = run_suites(("all",), max_n=4, trials=3, seed=2)
    assert report.ok
    assert {check.suite for check in report.checks} == set(SUITES)
    for check in report.checks:
        json.dumps(check.counterexample)


def test_unknown_suite_is_rejected():
    with pytest.raises(ValueError):
        run_suites(("nonsense",), max_n=3, trials=1, seed=0)


def test_suite_selection_deduplicates():
    once = run_suites(("combinatorics", "combinatorics"), max_n=3, trials=1, seed=0)
    twice = run_suites(("combinatorics",), max_n=3, trials=1, seed=0)
    assert [c.name for c in once.checks] == [c.name for c in twice.checks]


def test_sweep_rows_summary():
    rows = sweep_rows(4)
    assert len(rows) == 8
    assert rows == sorted(rows, key=lambda row: row["blocks"])
    borel = next(row for row in rows if row["blocks"] == [1, 1, 1, 1])
    assert borel["m_size"] == 6
    assert borel["base_size"] == 3
    assert borel["derived_size"] == 0
    assert borel["orbit_dim_bound"] == 3
    assert borel["anchored"] is True
    single = next(row for row in rows if row["blocks"] == [4])
    assert single["m_size"] == 0
    assert single["anchored"] is False

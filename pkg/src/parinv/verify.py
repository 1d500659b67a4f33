"""Randomized and fixture-based verification of the package's claims.

Five suites cover the combinatorial layer, invariance of the generators,
their algebraic independence, orbit dimensions, and canonicalization.  Every
check is reproducible: trial randomness is derived from the seed, the block
structure, and the trial index, and a failing check reports the first
counterexample it saw.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .action import adjoint, random_unitriangular
from .blocks import BaseData, BlockStructure, Root, base_data, solving_order
from .canonical import (
    CanonicalizationResult,
    CanonicalPoint,
    canonicalize_witness,
    monomial_table,
    pi_map,
    uniqueness_probe,
)
from .exceptions import DegenerateOrbitError, ParinvError
from .invariants import (
    PairSpec,
    eval_minor,
    eval_pair,
    invariant_vector,
    jacobian_rank,
    minor_spec,
    orbit_dim_bound,
    pair_spec,
    tangent_rank,
)
from .linalg import Matrix, ONE, Scalar, ZERO, format_scalar
from .nilrad import random_nilrad, support
from .structure import (
    absorbable_roots,
    chain_roots,
    last_column_anchor,
    principal_minors,
)

SUITES = ("combinatorics", "invariance", "independence", "orbit-dim", "canonical")

EXAMPLE_BLOCKS = ((1, 3, 2, 1, 3, 2, 2), (2, 2, 1, 3, 2, 1, 3), (1, 1, 4, 2))

# expected root data of the three worked block structures
FIXTURES: dict[tuple[int, ...], dict] = {
    (1, 3, 2, 1, 3, 2, 2): {
        "base": {
            (1, 2), (2, 10), (3, 6), (4, 5), (5, 9), (6, 7),
            (7, 8), (9, 12), (10, 11), (11, 14), (12, 13),
        },
        "derived": {(2, 5), (2, 6), (5, 7), (8, 11), (8, 12), (9, 11), (11, 13)},
        "chain": {
            (1, 2), (2, 5), (2, 6), (3, 6), (5, 7), (5, 9), (6, 7), (7, 8),
            (8, 11), (8, 12), (9, 11), (9, 12), (11, 13), (11, 14), (12, 13),
        },
        "absorbable": {
            (4, 7), (4, 8), (4, 9), (4, 11), (4, 12), (4, 13), (4, 14),
            (10, 13), (10, 14),
        },
        "minors": [
            ((1,), (2,)), ((2, 3), (5, 6)), ((5, 6), (7, 9)),
            ((7,), (8,)), ((8, 9), (11, 12)), ((11, 12), (13, 14)),
        ],
    },
    (2, 2, 1, 3, 2, 1, 3): {
        "base": {
            (1, 4), (2, 3), (3, 7), (4, 5), (5, 6), (6, 14),
            (7, 10), (8, 9), (9, 13), (10, 11), (11, 12),
        },
        "derived": {(3, 5), (6, 9), (6, 10), (7, 9), (9, 11)},
        "chain": {
            (1, 4), (2, 3), (3, 5), (3, 7), (4, 5), (5, 6), (6, 9), (6, 10),
            (6, 14), (7, 9), (7, 10), (8, 9), (9, 11), (9, 13), (10, 11), (11, 12),
        },
        "absorbable": set(),
        "minors": [
            ((1, 2), (3, 4)), ((3, 4), (5, 7)), ((5,), (6,)),
            ((6, 7, 8), (9, 10, 14)), ((9, 10), (11, 13)), ((11,), (12,)),
        ],
    },
    (1, 1, 4, 2): {
        "base": {(1, 2), (2, 3), (5, 8), (6, 7)},
        "derived": {(3, 7), (3, 8)},
        "chain": {(1, 2), (2, 3), (3, 7), (3, 8)},
        "absorbable": set(),
        "minors": [((1,), (2,)), ((2,), (3,)), ((3, 4), (7, 8))],
    },
}


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    trials: int
    seed: int
    passed: bool
    detail: str = ""
    counterexample: dict | None = None


@dataclass(frozen=True)
class VerifyReport:
    max_n: int
    trials: int
    seed: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All ordered compositions of n, in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def small_structures(max_n: int) -> list[tuple[int, ...]]:
    return [sizes for n in range(1, max_n + 1) for sizes in compositions(n)]


def trial_rng(seed: int, name: str, sizes: tuple[int, ...], trial: int) -> random.Random:
    return random.Random(f"{seed}:{name}:{sizes}:{trial}")


class _Recorder:
    """Accumulates trial counts and the first counterexample of one check."""

    def __init__(self, suite: str, name: str, seed: int):
        self.suite = suite
        self.name = name
        self.seed = seed
        self.trials = 0
        self.failure: dict | None = None
        self.detail = ""

    def count(self, k: int = 1) -> None:
        self.trials += k

    def fail(self, sizes: tuple[int, ...], detail: str, **extra) -> None:
        if self.failure is None:
            self.failure = {"blocks": list(sizes), **extra}
            self.detail = detail

    def result(self) -> CheckResult:
        return CheckResult(
            suite=self.suite,
            name=self.name,
            trials=self.trials,
            seed=self.seed,
            passed=self.failure is None,
            detail=self.detail,
            counterexample=self.failure,
        )


def _matrix_entries(mat: Matrix) -> list[list]:
    return [[i, j, format_scalar(mat.at(i, j))] for (i, j) in sorted(support(mat))]


def _sample(
    bd: BaseData, rng: random.Random, attempts: int = 5
) -> tuple[Matrix, CanonicalizationResult] | None:
    """Random nilradical point whose orbit meets the canonical chart."""
    for _ in range(attempts):
        x = random_nilrad(bd.bs, rng, dense=True)
        try:
            return x, canonicalize_witness(bd, x)
        except DegenerateOrbitError:
            continue
    return None


# ---------------------------------------------------------------------------
# combinatorics


def _check_fixtures(seed: int) -> CheckResult:
    rec = _Recorder("combinatorics", "example-fixtures", seed)
    for sizes, expected in FIXTURES.items():
        rec.count()
        bd = base_data(BlockStructure(sizes))
        minors = [(pm.row_idx, pm.col_idx) for pm in principal_minors(bd)]
        found = {
            "base": set(bd.base),
            "derived": set(bd.derived),
            "chain": set(chain_roots(bd)),
            "absorbable": set(absorbable_roots(bd)),
            "minors": minors,
        }
        for key, want in expected.items():
            if found[key] != want:
                rec.fail(
                    sizes,
                    f"{key} mismatch",
                    expected=sorted(want) if isinstance(want, set) else want,
                    found=sorted(found[key]) if isinstance(want, set) else found[key],
                )
                break
    return rec.result()


def _check_staircase(seed: int, max_n: int) -> CheckResult:
    """Single-column blocks give the staircase base and no derived roots."""
    rec = _Recorder("combinatorics", "staircase-base", seed)
    for n in range(2, max(max_n, 6) + 1):
        rec.count()
        sizes = (1,) * n
        bd = base_data(BlockStructure(sizes))
        want = {(i, i + 1) for i in range(1, n)}
        if set(bd.base) != want or bd.derived:
            rec.fail(sizes, "staircase base mismatch", found=sorted(bd.base))
    return rec.result()


def _check_base_shape(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    rec = _Recorder("combinatorics", "base-shape", seed)
    for sizes in structures:
        rec.count()
        bd = base_data(BlockStructure(sizes))
        rows = [root[0] for root in bd.base]
        cols = [root[1] for root in bd.base]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            rec.fail(sizes, "base repeats a row or column")
        elif not set(bd.base) <= bd.m_set or not set(bd.derived) <= bd.m_set:
            rec.fail(sizes, "generator root outside the nilradical")
        elif set(bd.base) & set(bd.derived):
            rec.fail(sizes, "base and derived roots overlap")
        elif len(bd.pairs) != len(bd.derived):
            rec.fail(sizes, "derived roots not in bijection with pairs")
    return rec.result()


def _check_base_coverage(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    """Every non-base position has a base root leftward in its row or below in its column."""
    rec = _Recorder("combinatorics", "base-coverage", seed)
    for sizes in structures:
        rec.count()
        bd = base_data(BlockStructure(sizes))
        for i, j in bd.m_roots:
            if (i, j) in bd.base_set:
                continue
            in_row = any(b < j for (a, b) in bd.base if a == i)
            in_col = any(a > i for (a, b) in bd.base if b == j)
            if not in_row and not in_col:
                rec.fail(sizes, f"position ({i}, {j}) uncovered")
                break
    return rec.result()


def _check_base_descent(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    """Below a base root inside a block, the next row holds a base root further left."""
    rec = _Recorder("combinatorics", "base-descent", seed)
    for sizes in structures:
        rec.count()
        bd = base_data(BlockStructure(sizes))
        bounds = set(bd.bs.boundaries)
        for i, j in bd.base:
            if i in bounds:
                continue
            if not any(a == i + 1 and b < j for (a, b) in bd.base):
                rec.fail(sizes, f"no descent below base root ({i}, {j})")
                break
    return rec.result()


def _check_base_corner(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    """A base root with nothing up-right of it starts a block row or ends a block column."""
    rec = _Recorder("combinatorics", "base-corner", seed)
    for sizes in structures:
        rec.count()
        bd = base_data(BlockStructure(sizes))
        bounds = bd.bs.boundaries
        starts = {r + 1 for r in bounds[:-1]}
        ends = set(bounds[1:])
        for i, j in bd.base:
            if any(a < i and b > j for (a, b) in bd.base):
                continue
            if i not in starts and j not in ends:
                rec.fail(sizes, f"base root ({i}, {j}) off the block corners")
                break
    return rec.result()


def _check_ladder(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    """With a base root in the last column, the last block sizes the ladder."""
    rec = _Recorder("combinatorics", "last-column-ladder", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        anchor = last_column_anchor(bd)
        if anchor is None:
            continue
        rec.count()
        r = bd.bs.sizes[-1]
        n = bd.bs.n
        ladder = anchor.ladder
        ok = (
            len(ladder) == r
            and all(root in bd.base_set for root in ladder)
            and [root[0] for root in ladder] == list(range(anchor.anchor_row + r - 1, anchor.anchor_row - 1, -1))
            and list(anchor.cols) == sorted(anchor.cols)
            and ladder[-1][1] == n
        )
        if not ok:
            rec.fail(sizes, "ladder malformed", ladder=[list(root) for root in ladder])
    return rec.result()


def _check_row_first_column(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    """Rows holding several generator roots start right after their own block."""
    rec = _Recorder("combinatorics", "row-first-column", seed)
    for sizes in structures:
        rec.count()
        bd = base_data(BlockStructure(sizes))
        by_row: dict[int, list[int]] = {}
        for i, j in list(bd.base) + list(bd.derived):
            by_row.setdefault(i, []).append(j)
        for i, cols in by_row.items():
            if len(cols) < 2:
                continue
            block_end = bd.bs.boundaries[bd.bs.block_of(i)]
            if min(cols) != block_end + 1:
                rec.fail(sizes, f"row {i} roots start at {min(cols)}, not {block_end + 1}")
                break
    return rec.result()


def _check_chain_row_bound(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    """Chain roots stay in the leading rows of every block after the first."""
    rec = _Recorder("combinatorics", "chain-row-bound", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        if last_column_anchor(bd) is None:
            continue
        rec.count()
        r = bd.bs.sizes[-1]
        bounds = bd.bs.boundaries
        for i, j in sorted(chain_roots(bd)):
            k = bd.bs.block_of(i)
            if k == 1:
                continue
            if i > bounds[k - 1] + min(r, bd.bs.sizes[k - 1]):
                rec.fail(sizes, f"chain root ({i}, {j}) below the leading rows")
                break
    return rec.result()


def _check_leading_row_count(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    """The first row of each later block meets its minor columns in chain roots only."""
    rec = _Recorder("combinatorics", "leading-row-count", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        if last_column_anchor(bd) is None:
            continue
        rec.count()
        chain = chain_roots(bd)
        generators = bd.base_set | bd.derived_set
        for pm in principal_minors(bd):
            if pm.block == 1:
                continue
            first_row = bd.bs.boundaries[pm.block - 1] + 1
            hits = [(first_row, j) for j in pm.col_idx if (first_row, j) in generators]
            if len(hits) != pm.size or any(root not in chain for root in hits):
                rec.fail(sizes, f"leading row of block {pm.block} mismatched", hits=[list(h) for h in hits])
                break
    return rec.result()


def _check_chain_column_presence(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    """Left of a chain root, every nilradical column holds a chain root of its own."""
    rec = _Recorder("combinatorics", "chain-column-presence", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        if last_column_anchor(bd) is None:
            continue
        rec.count()
        chain = chain_roots(bd)
        chain_cols = {b for (a, b) in chain}
        for i, j in sorted(chain):
            for jt in range(i + 1, j):
                if (i, jt) in bd.m_set and jt not in chain_cols:
                    rec.fail(sizes, f"no chain root in column {jt}, left of ({i}, {j})")
                    break
            if rec.failure:
                break
    return rec.result()


def _check_minor_layout(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    rec = _Recorder("combinatorics", "minor-layout", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        if last_column_anchor(bd) is None:
            continue
        rec.count()
        r = bd.bs.sizes[-1]
        minors = principal_minors(bd)
        rows_seen: set[int] = set()
        cols_seen: set[int] = set()
        for pm in minors:
            expected = min(r, bd.bs.sizes[pm.block - 1])
            if pm.size != expected or len(pm.row_idx) != len(pm.col_idx):
                rec.fail(sizes, f"minor of block {pm.block} has size {pm.size}, expected {expected}")
                break
            if rows_seen & set(pm.row_idx) or cols_seen & set(pm.col_idx):
                rec.fail(sizes, f"minor of block {pm.block} overlaps another")
                break
            rows_seen.update(pm.row_idx)
            cols_seen.update(pm.col_idx)
        if not rec.failure and len(minors) != bd.bs.s - 1:
            rec.fail(sizes, f"{len(minors)} minors for {bd.bs.s} blocks")
    return rec.result()


def _check_absorbable_shape(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    rec = _Recorder("combinatorics", "absorbable-shape", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        if last_column_anchor(bd) is None:
            continue
        rec.count()
        chain = chain_roots(bd)
        chain_rows = {root[0] for root in chain}
        expected = {
            (i, j)
            for (i, j) in bd.m_roots
            if i not in chain_rows and any(a > i and b == j for (a, b) in chain)
        }
        if absorbable_roots(bd) != expected:
            rec.fail(sizes, "absorbable set disagrees with its definition")
    return rec.result()


def suite_combinatorics(max_n: int, trials: int, seed: int) -> list[CheckResult]:
    structures = small_structures(max_n) + list(EXAMPLE_BLOCKS)
    return [
        _check_fixtures(seed),
        _check_staircase(seed, max_n),
        _check_base_shape(seed, structures),
        _check_base_coverage(seed, structures),
        _check_base_descent(seed, structures),
        _check_base_corner(seed, structures),
        _check_ladder(seed, structures),
        _check_row_first_column(seed, structures),
        _check_chain_row_bound(seed, structures),
        _check_leading_row_count(seed, structures),
        _check_chain_column_presence(seed, structures),
        _check_minor_layout(seed, structures),
        _check_absorbable_shape(seed, structures),
    ]


# ---------------------------------------------------------------------------
# invariance


def _check_conjugation_invariance(
    seed: int, structures: list[tuple[int, ...]], trials: int, example_trials: int
) -> CheckResult:
    rec = _Recorder("invariance", "conjugation-invariance", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        rounds = example_trials if sizes in EXAMPLE_BLOCKS else trials
        for trial in range(rounds):
            rec.count()
            rng = trial_rng(seed, "conjugation-invariance", sizes, trial)
            x = random_nilrad(bd.bs, rng, dense=True)
            g = random_unitriangular(bd.bs.n, rng)
            if invariant_vector(bd, adjoint(g, x)) != invariant_vector(bd, x):
                rec.fail(
                    sizes,
                    f"generator value changed under conjugation (trial {trial})",
                    trial=trial,
                    matrix=_matrix_entries(x),
                    conjugator=_matrix_entries(g),
                )
                return rec.result()
    return rec.result()


# polynomials as sorted position tuples (with multiplicity) -> coefficient
_Poly = dict[tuple[Root, ...], Scalar]


def _sym_minor(row_idx: tuple[int, ...], col_idx: tuple[int, ...], m_set) -> _Poly:
    """Determinant as an explicit polynomial in the nilradical entries."""
    size = len(row_idx)
    poly: _Poly = {}

    def expand(p: int, used: int, sign: int, picked: list[Root]):
        if p == size:
            key = tuple(sorted(picked))
            poly[key] = poly.get(key, ZERO) + sign
            return
        r = row_idx[p]
        for q, c in enumerate(col_idx):
            if used & (1 << q) or (r, c) not in m_set:
                continue
            swaps = bin(used >> (q + 1)).count("1")
            expand(p + 1, used | (1 << q), -sign if swaps % 2 else sign, picked + [(r, c)])

    expand(0, 0, 1, [])
    return {key: value for key, value in poly.items() if value != ZERO}


def _poly_mul(p: _Poly, q: _Poly) -> _Poly:
    out: _Poly = {}
    for key_p, coeff_p in p.items():
        for key_q, coeff_q in q.items():
            key = tuple(sorted(key_p + key_q))
            out[key] = out.get(key, ZERO) + coeff_p * coeff_q
    return {key: value for key, value in out.items() if value != ZERO}


def _poly_add(p: _Poly, q: _Poly) -> _Poly:
    out = dict(p)
    for key, coeff in q.items():
        out[key] = out.get(key, ZERO) + coeff
    return {key: value for key, value in out.items() if value != ZERO}


def _poly_eval(poly: _Poly, mat: Matrix) -> Scalar:
    total = ZERO
    for key, coeff in poly.items():
        term = coeff
        for pos in key:
            term *= mat.at(*pos)
        total += term
    return total


def _check_generator_polynomials(seed: int, max_n: int, points: int = 10) -> CheckResult:
    """Expanded generator polynomials agree with determinant evaluation."""
    rec = _Recorder("invariance", "generator-polynomials", seed)
    for sizes in small_structures(min(max_n, 4)):
        bd = base_data(BlockStructure(sizes))
        polys: list[tuple[Root, _Poly, object]] = []
        for root in bd.base:
            spec = minor_spec(bd, root)
            polys.append((root, _sym_minor(spec.row_idx, spec.col_idx, bd.m_set), spec))
        for pair in bd.pairs:
            spec = pair_spec(bd, pair)
            acc: _Poly = {}
            for left, right in spec.terms:
                acc = _poly_add(
                    acc,
                    _poly_mul(
                        _sym_minor(left.row_idx, left.col_idx, bd.m_set),
                        _sym_minor(right.row_idx, right.col_idx, bd.m_set),
                    ),
                )
            polys.append((pair.derived_root, acc, spec))
        for trial in range(points):
            rec.count()
            rng = trial_rng(seed, "generator-polynomials", sizes, trial)
            x = random_nilrad(bd.bs, rng, dense=True)
            for root, poly, spec in polys:
                direct = eval_pair(x, spec) if isinstance(spec, PairSpec) else eval_minor(x, spec)
                if _poly_eval(poly, x) != direct:
                    rec.fail(
                        sizes,
                        f"polynomial for root {root} disagrees (trial {trial})",
                        root=list(root),
                        trial=trial,
                        matrix=_matrix_entries(x),
                    )
                    return rec.result()
    return rec.result()


def suite_invariance(max_n: int, trials: int, seed: int) -> list[CheckResult]:
    structures = small_structures(max_n) + list(EXAMPLE_BLOCKS)
    return [
        _check_conjugation_invariance(seed, structures, trials, example_trials=2),
        _check_generator_polynomials(seed, max_n),
    ]


# ---------------------------------------------------------------------------
# independence and orbit dimension


def _check_jacobian(seed: int, structures: list[tuple[int, ...]], attempts: int = 5) -> CheckResult:
    rec = _Recorder("independence", "jacobian-rank", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        target = len(bd.base) + len(bd.derived)
        rec.count()
        best = -1
        for trial in range(attempts):
            rng = trial_rng(seed, "jacobian-rank", sizes, trial)
            best = max(best, jacobian_rank(bd, random_nilrad(bd.bs, rng, dense=True)))
            if best == target:
                break
        if best != target:
            rec.fail(sizes, f"jacobian rank {best}, expected {target}")
    return rec.result()


def _check_tangent(
    seed: int, structures: list[tuple[int, ...]], trials: int, example_trials: int, attempts: int = 5
) -> CheckResult:
    rec = _Recorder("orbit-dim", "tangent-rank", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        target = orbit_dim_bound(bd)
        rounds = example_trials if sizes in EXAMPLE_BLOCKS else trials
        for trial in range(rounds):
            rec.count()
            best = -1
            for attempt in range(attempts):
                rng = trial_rng(seed, "tangent-rank", sizes, trial * attempts + attempt)
                best = max(best, tangent_rank(bd, random_nilrad(bd.bs, rng, dense=True)))
                if best == target:
                    break
            if best != target:
                rec.fail(sizes, f"orbit dimension {best}, expected {target} (trial {trial})")
                return rec.result()
    return rec.result()


def suite_independence(max_n: int, trials: int, seed: int) -> list[CheckResult]:
    structures = small_structures(max_n) + [EXAMPLE_BLOCKS[0]]
    return [_check_jacobian(seed, structures)]


def suite_orbit_dim(max_n: int, trials: int, seed: int) -> list[CheckResult]:
    structures = small_structures(max_n) + [EXAMPLE_BLOCKS[0]]
    return [_check_tangent(seed, structures, trials, example_trials=1)]


# ---------------------------------------------------------------------------
# canonicalization


def _check_monomial_table(seed: int, structures: list[tuple[int, ...]]) -> CheckResult:
    """Each generator reduces to one signed monomial solvable in order."""
    rec = _Recorder("canonical", "monomial-table", seed)
    for sizes in structures:
        rec.count()
        bd = base_data(BlockStructure(sizes))
        try:
            table = monomial_table(bd)
        except ParinvError as exc:
            rec.fail(sizes, f"monomial table failed: {exc}")
            continue
        order = solving_order(bd)
        place = {root: k for k, root in enumerate(order)}
        for root, info in table.items():
            if info.sign not in (1, -1):
                rec.fail(sizes, f"sign of {root} is {info.sign}")
                break
            if any(place[other] >= place[root] for other, _ in info.factors):
                rec.fail(sizes, f"monomial for {root} uses a later root")
                break
            # keeps pi_map division-safe: base coefficients never vanish
            if any(other not in bd.base_set for other, _ in info.factors):
                rec.fail(sizes, f"monomial for {root} divides by a non-base coefficient")
                break
    return rec.result()


def _check_round_trip(
    seed: int, structures: list[tuple[int, ...]], trials: int, example_trials: int
) -> CheckResult:
    rec = _Recorder("canonical", "representative-round-trip", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        rounds = example_trials if sizes in EXAMPLE_BLOCKS else trials
        for trial in range(rounds):
            rec.count()
            rng = trial_rng(seed, "representative-round-trip", sizes, trial)
            sampled = _sample(bd, rng)
            if sampled is None:
                rec.fail(sizes, f"no generic point found (trial {trial})")
                return rec.result()
            x, res = sampled
            y = res.point.matrix()
            g = random_unitriangular(bd.bs.n, rng)
            problems = []
            if adjoint(res.witness, x) != y:
                problems.append("witness does not reach the representative")
            if pi_map(bd, x) != res.point:
                problems.append("coefficient solve disagrees with the representative")
            if pi_map(bd, adjoint(g, x)) != res.point:
                problems.append("coefficients changed along the orbit")
            if not res.zero_coefficients and pi_map(bd, y) != res.point:
                problems.append("representative is not a fixed point")
            if problems:
                rec.fail(
                    sizes,
                    "; ".join(problems) + f" (trial {trial})",
                    trial=trial,
                    matrix=_matrix_entries(x),
                )
                return rec.result()
    return rec.result()


def _check_uniqueness(
    seed: int, structures: list[tuple[int, ...]], trials: int
) -> CheckResult:
    """Orbit mates share a representative; perturbed points do not."""
    rec = _Recorder("canonical", "representative-uniqueness", seed)
    for sizes in structures:
        bd = base_data(BlockStructure(sizes))
        if not bd.base:
            continue
        for trial in range(trials):
            rec.count()
            rng = trial_rng(seed, "representative-uniqueness", sizes, trial)
            sampled = _sample(bd, rng)
            if sampled is None:
                continue
            x, res = sampled
            g = random_unitriangular(bd.bs.n, rng)
            mate = canonicalize_witness(bd, adjoint(g, x))
            if not uniqueness_probe(bd, res.point, mate.point):
                rec.fail(sizes, f"orbit mates got different representatives (trial {trial})", trial=trial)
                return rec.result()
            root, value = res.point.coeffs[0]
            bumped = dict(res.point.coeffs)
            bumped[root] = value + ONE
            other = CanonicalPoint.build(bd, bumped)
            if uniqueness_probe(bd, res.point, other):
                rec.fail(sizes, f"distinct points probed equal (trial {trial})", trial=trial)
                return rec.result()
    return rec.result()


def suite_canonical(max_n: int, trials: int, seed: int) -> list[CheckResult]:
    structures = small_structures(max_n) + list(EXAMPLE_BLOCKS)
    return [
        _check_monomial_table(seed, structures),
        _check_round_trip(seed, structures, trials, example_trials=1),
        _check_uniqueness(seed, small_structures(max_n), max(1, trials // 5)),
    ]


# ---------------------------------------------------------------------------
# entry points


_SUITE_RUNNERS = {
    "combinatorics": suite_combinatorics,
    "invariance": suite_invariance,
    "independence": suite_independence,
    "orbit-dim": suite_orbit_dim,
    "canonical": suite_canonical,
}


def run_suites(
    suites: tuple[str, ...], max_n: int = 5, trials: int = 10, seed: int = 0
) -> VerifyReport:
    """Run the named suites ('all' included) and collect a sorted report."""
    chosen: list[str] = []
    for name in suites:
        if name == "all":
            chosen = list(SUITES)
            break
        if name not in _SUITE_RUNNERS:
            raise ValueError(f"unknown suite {name!r}, expected one of {', '.join(SUITES + ('all',))}")
        if name not in chosen:
            chosen.append(name)
    checks: list[CheckResult] = []
    for name in chosen:
        checks.extend(_SUITE_RUNNERS[name](max_n, trials, seed))
    checks.sort(key=lambda check: (check.suite, check.name))
    return VerifyReport(max_n=max_n, trials=trials, seed=seed, checks=tuple(checks))


def sweep_rows(n: int) -> list[dict]:
    """Size summary of every block structure on n, sorted by composition."""
    rows = []
    for sizes in compositions(n):
        bd = base_data(BlockStructure(sizes))
        rows.append(
            {
                "blocks": list(sizes),
                "m_size": len(bd.m_roots),
                "base_size": len(bd.base),
                "derived_size": len(bd.derived),
                "orbit_dim_bound": orbit_dim_bound(bd),
                "anchored": last_column_anchor(bd) is not None,
            }
        )
    rows.sort(key=lambda row: row["blocks"])
    return rows

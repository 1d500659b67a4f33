"""Exact combinatorics, invariants, and canonical forms for block nilradicals.

The package works over the rationals throughout. Importing it stays cheap:
the HTTP service layer and its dependencies load only when `parinv.service`
or the command line client is used.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("parinv")
except PackageNotFoundError:
    __version__ = "0.0.0"

from .blocks import (
    AdmissiblePair,
    BaseData,
    BlockStructure,
    admissible_pairs,
    base_data,
    compute_base,
    delta_r_plus,
    dominates,
    order_lt,
    parse_blocks,
    roots_m,
    solving_order,
)
from .canonical import (
    CanonicalizationResult,
    CanonicalPoint,
    canonicalize_witness,
    intertwiner,
    monomial_table,
    pi_map,
    uniqueness_probe,
)
from .diagram import diagram_json, parse_layers, render_diagram
from .exceptions import (
    AnchorMissingError,
    BadIndexError,
    DegenerateOrbitError,
    NonSquareError,
    NotAMonomialError,
    NotUnitriangularError,
    ParinvError,
    SizeMismatchError,
    StructuralViolationError,
    SupportViolationError,
    ZeroBaseMinorError,
)
from .action import adjoint, elementary, random_unitriangular
from .invariants import (
    eval_minor,
    eval_pair,
    invariant_vector,
    jacobian_rank,
    minor_spec,
    orbit_dim_bound,
    pair_spec,
    tangent_rank,
)
from .linalg import Matrix, Scalar, format_scalar, parse_scalar, solve_linear
from .nilrad import assert_in_nilradical, from_entries, random_nilrad, support
from .structure import (
    AnchorData,
    absorbable_roots,
    chain_roots,
    in_reduced_form,
    last_column_anchor,
    principal_minors,
    x_membership,
)
from .verify import run_suites, sweep_rows

__all__ = [
    "__version__",
    "AdmissiblePair",
    "AnchorData",
    "AnchorMissingError",
    "BadIndexError",
    "BaseData",
    "BlockStructure",
    "CanonicalPoint",
    "CanonicalizationResult",
    "DegenerateOrbitError",
    "Matrix",
    "NonSquareError",
    "NotAMonomialError",
    "NotUnitriangularError",
    "ParinvError",
    "Scalar",
    "SizeMismatchError",
    "StructuralViolationError",
    "SupportViolationError",
    "ZeroBaseMinorError",
    "absorbable_roots",
    "adjoint",
    "admissible_pairs",
    "assert_in_nilradical",
    "base_data",
    "canonicalize_witness",
    "chain_roots",
    "compute_base",
    "delta_r_plus",
    "diagram_json",
    "dominates",
    "elementary",
    "eval_minor",
    "eval_pair",
    "format_scalar",
    "from_entries",
    "in_reduced_form",
    "intertwiner",
    "invariant_vector",
    "jacobian_rank",
    "last_column_anchor",
    "minor_spec",
    "monomial_table",
    "orbit_dim_bound",
    "order_lt",
    "pair_spec",
    "parse_blocks",
    "parse_layers",
    "parse_scalar",
    "pi_map",
    "principal_minors",
    "random_nilrad",
    "random_unitriangular",
    "render_diagram",
    "roots_m",
    "run_suites",
    "solve_linear",
    "solving_order",
    "support",
    "sweep_rows",
    "tangent_rank",
    "uniqueness_probe",
    "x_membership",
]

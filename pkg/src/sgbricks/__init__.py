"""Numerical semigroups, relative ideals and duals, and brick search."""

from .balanced import (
    AperyPartition,
    BalancedProfile,
    BoundaryDecomposition,
    Classification,
    apery_partition,
    boundary_sets,
    canonical_brick,
    classify,
    frobenius_formula_probe,
    frobenius_of_quad,
    frobenius_of_triple,
    unitary_family,
)
from .brickhunt import (
    BrickReport,
    LiftResult,
    SearchConfig,
    enumerate_ideals,
    enumerate_semigroups,
    lift,
    read_reports,
    render_reports,
    search,
    summarize,
    write_reports,
)
from .ideal import BrickCheck, RelativeIdeal, brick_check, maximal_ideal
from .sgcore import NumericalSemigroup, coprime_pair_frobenius

__version__ = "0.1.0"

__all__ = [
    "AperyPartition",
    "BalancedProfile",
    "BoundaryDecomposition",
    "BrickCheck",
    "BrickReport",
    "Classification",
    "LiftResult",
    "NumericalSemigroup",
    "RelativeIdeal",
    "SearchConfig",
    "apery_partition",
    "boundary_sets",
    "brick_check",
    "canonical_brick",
    "classify",
    "coprime_pair_frobenius",
    "enumerate_ideals",
    "enumerate_semigroups",
    "frobenius_formula_probe",
    "frobenius_of_quad",
    "frobenius_of_triple",
    "lift",
    "maximal_ideal",
    "read_reports",
    "render_reports",
    "search",
    "summarize",
    "unitary_family",
    "write_reports",
]

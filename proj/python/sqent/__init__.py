"""Steady-state entanglement of two atoms in a broadband squeezed vacuum."""

from ._core import (
    AmbiguityError,
    AtomPairConfig,
    BathParams,
    CollectivePopulations,
    DomainError,
    IntegrationError,
    SqentError,
    StructureError,
    UsageError,
    build_liouvillian,
    c1_identical,
    c1_nonidentical,
    concurrence_general,
    concurrence_xstate,
    evaluate_point,
    fidelities,
    figure_table,
    gamma12,
    omega12,
    optimal_photon_number,
    propagate,
    purity,
    result_columns,
    steady_identical,
    steady_nonidentical,
    steady_state,
    tc_parameter,
)

__all__ = [
    "AmbiguityError",
    "AtomPairConfig",
    "BathParams",
    "CollectivePopulations",
    "DomainError",
    "IntegrationError",
    "SqentError",
    "StructureError",
    "UsageError",
    "build_liouvillian",
    "c1_identical",
    "c1_nonidentical",
    "concurrence_general",
    "concurrence_xstate",
    "evaluate_point",
    "fidelities",
    "figure_table",
    "gamma12",
    "omega12",
    "optimal_photon_number",
    "propagate",
    "purity",
    "result_columns",
    "steady_identical",
    "steady_nonidentical",
    "steady_state",
    "tc_parameter",
]

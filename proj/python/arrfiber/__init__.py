"""Exact invariants of surfaces attached to complex line arrangements."""

from ._core import (
    ArrfiberError,
    __version__,
    arrangement_profile,
    canonical_coefficients,
    catalog,
    chern_numbers,
    hj_evaluate,
    hj_expand,
    hodge_diamond,
    invariants,
    local_invariants,
    modular_beta,
    profile,
    resolution_dot,
    resolution_graph,
    sweep_verify,
    verify_pair,
    weight_data,
)

__all__ = [
    "ArrfiberError",
    "__version__",
    "arrangement_profile",
    "canonical_coefficients",
    "catalog",
    "chern_numbers",
    "hj_evaluate",
    "hj_expand",
    "hodge_diamond",
    "invariants",
    "local_invariants",
    "modular_beta",
    "profile",
    "resolution_dot",
    "resolution_graph",
    "sweep_verify",
    "verify_pair",
    "weight_data",
]

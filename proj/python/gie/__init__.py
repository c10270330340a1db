"""Gaussian intrinsic entanglement of two-mode Gaussian states."""

from ._gie import (
    InvalidInput,
    NumericFailure,
    StdState,
    analyze_json,
    catalog,
    classify,
    gie,
    gr2eof,
    is_entangled,
    is_physical,
    log_negativity,
    lower_bound_l,
    symplectic_eigenvalues,
    upper_bound_u,
    williamson,
)

__all__ = [
    "InvalidInput",
    "NumericFailure",
    "StdState",
    "analyze_json",
    "catalog",
    "classify",
    "gie",
    "gr2eof",
    "is_entangled",
    "is_physical",
    "log_negativity",
    "lower_bound_l",
    "symplectic_eigenvalues",
    "upper_bound_u",
    "williamson",
]

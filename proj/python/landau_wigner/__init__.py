"""Wigner functions and marginals of Landau levels."""

from ._core import (
    Params,
    check_discrete,
    cli,
    derive_wigner_from_G,
    eval_ground,
    eval_wigner,
    gauge_transform,
    grid,
    integrate,
    marginal,
    radial_quantum_numbers,
    run_suite,
    star_eigenvalues,
    suite_names,
    wavefunction,
)

__all__ = [
    "Params",
    "check_discrete",
    "cli",
    "derive_wigner_from_G",
    "eval_ground",
    "eval_wigner",
    "gauge_transform",
    "grid",
    "integrate",
    "marginal",
    "radial_quantum_numbers",
    "run_suite",
    "star_eigenvalues",
    "suite_names",
    "wavefunction",
]

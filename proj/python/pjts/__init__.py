"""Python bindings for the Jordan triple kernel verification library."""

from ._pjts import (
    ConfigError,
    ConsistencyError,
    DimensionError,
    DomainError,
    Model,
    NumericalDegeneracy,
    absolute_rank,
    bergman,
    bs_residual,
    c_lambda,
    c_lambda_gamma,
    canonical_kernel,
    characteristic_numbers,
    compact_kernel_pair,
    dual_bergman,
    fundamental_kernel,
    h_kernel,
    is_tripotent,
    l_op,
    minpoly,
    minpoly_degree,
    pole_lattice,
    q_op,
    run_suite,
    selberg_convergent,
    threshold,
    trace_form,
    validate_axioms,
    verify_descent,
    verify_power_identity,
)

__all__ = [
    "ConfigError",
    "ConsistencyError",
    "DimensionError",
    "DomainError",
    "Model",
    "NumericalDegeneracy",
    "absolute_rank",
    "bergman",
    "bs_residual",
    "c_lambda",
    "c_lambda_gamma",
    "canonical_kernel",
    "characteristic_numbers",
    "compact_kernel_pair",
    "dual_bergman",
    "fundamental_kernel",
    "h_kernel",
    "is_tripotent",
    "l_op",
    "minpoly",
    "minpoly_degree",
    "pole_lattice",
    "q_op",
    "run_suite",
    "selberg_convergent",
    "threshold",
    "trace_form",
    "validate_axioms",
    "verify_descent",
    "verify_power_identity",
]

__version__ = "0.1.0"

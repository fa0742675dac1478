"""Numerical laboratory for prime sums, short intervals, and weighted counts."""

from ._core import (
    CapacityError,
    Lab,
    NumericError,
    bound_envelope,
    delta_power,
    eval_f_poly,
    exp_integral_e1,
    expansion_residual,
    f_poly,
    gamma,
    inequality_window,
    log_weight,
    logarithmic_integral,
    substitution_g,
    tau_singular_part,
    weight,
)

__all__ = [
    "CapacityError",
    "Lab",
    "NumericError",
    "bound_envelope",
    "delta_power",
    "eval_f_poly",
    "exp_integral_e1",
    "expansion_residual",
    "f_poly",
    "gamma",
    "inequality_window",
    "log_weight",
    "logarithmic_integral",
    "substitution_g",
    "tau_singular_part",
    "weight",
]

"""
Semigroup module для RGHW-Ramp

Numerical semigroups, их gaps/conductor и Z-функция (перебор и closed form).
"""

from src.semigroup.numerical_semigroup import (
    NumericalSemigroup,
    make_semigroup,
    parse_semigroup,
    shifted_difference_count,
    z_closed_form,
    z_function,
    z_function_argmin,
)

__all__ = [
    "NumericalSemigroup",
    "make_semigroup",
    "parse_semigroup",
    # Z-function
    "shifted_difference_count",
    "z_function",
    "z_function_argmin",
    "z_closed_form",
]

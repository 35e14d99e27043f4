"""
Feng-Rao module для RGHW-Ramp

ρ̄ относительно упорядоченного базиса, таблица OWB, множества Λ_i / V_l и
нижние границы RGHW для пары кодов и дуальной пары.
"""

from src.fengrao.bounds import (
    FengRaoBound,
    rghw_bound_dual,
    rghw_bound_dual_argmin,
    rghw_bound_primary,
    rghw_bound_primary_argmin,
)
from src.fengrao.ordered_basis import (
    OrderedBasis,
    is_prefix_pair,
    read_basis_file,
    rho_bar,
    rho_set,
    standard_basis,
    write_basis_file,
)
from src.fengrao.owb import OwbTable, build_owb, support_lower_bound

__all__ = [
    # Types
    "OrderedBasis",
    "OwbTable",
    "FengRaoBound",
    # Basis
    "rho_bar",
    "rho_set",
    "standard_basis",
    "read_basis_file",
    "write_basis_file",
    "is_prefix_pair",
    # Table
    "build_owb",
    "support_lower_bound",
    # Bounds
    "rghw_bound_primary",
    "rghw_bound_primary_argmin",
    "rghw_bound_dual",
    "rghw_bound_dual_argmin",
]

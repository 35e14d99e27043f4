"""
Hermitian module для RGHW-Ramp

Кривая x^{q+1} = y^q + y над GF(q²): точки, коды C_𝓛(D, μQ), closed-form RGHW,
witness functions и сравнение с GHW.
"""

from src.hermitian.bounds import (
    HermitianRghw,
    abundance,
    consecutive_pairs,
    diff_table,
    g1,
    g2,
    ghw_master,
    improvable_sets,
    prop5_region,
    rghw_hermitian,
)
from src.hermitian.curve import (
    SUPPORTED_Q,
    HermitianFamily,
    build_hermitian,
    decompose_pole_order,
    evaluate_monomial,
    hermitian_basis,
    hermitian_code,
    hermitian_points,
    monomial_h_star,
)
from src.hermitian.witnesses import WitnessFunction, WitnessSet, witness_functions

__all__ = [
    # Constants
    "SUPPORTED_Q",
    # Curve
    "HermitianFamily",
    "build_hermitian",
    "hermitian_points",
    "hermitian_code",
    "hermitian_basis",
    "evaluate_monomial",
    "decompose_pole_order",
    "monomial_h_star",
    # Bounds
    "HermitianRghw",
    "g1",
    "g2",
    "diff_table",
    "prop5_region",
    "rghw_hermitian",
    "abundance",
    "ghw_master",
    "consecutive_pairs",
    "improvable_sets",
    # Witnesses
    "WitnessFunction",
    "WitnessSet",
    "witness_functions",
]

"""
AG Bounds module для RGHW-Ramp

One-point коды C_𝓛(D, μQ): H*(Q) через rank oracle, профиль pole orders и
границы RGHW (exact-set / shifted / closed / dual).
"""

from src.ag_bounds.bounds import (
    closed_z,
    lemma1_sets,
    onepoint_tiers,
    rghw_bound_onepoint,
    rghw_bound_onepoint_dual,
    support_bound_ag,
)
from src.ag_bounds.one_point import OnePointCodeFamily, PoleOrderProfile, compute_h_star

__all__ = [
    # Family
    "OnePointCodeFamily",
    "PoleOrderProfile",
    "compute_h_star",
    # Bounds
    "lemma1_sets",
    "support_bound_ag",
    "closed_z",
    "rghw_bound_onepoint",
    "rghw_bound_onepoint_dual",
    "onepoint_tiers",
]

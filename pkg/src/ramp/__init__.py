"""
Ramp module для RGHW-Ramp

Линейные ramp-схемы C₁/C₂: раздача и восстановление долей, взаимная
информация, профили утечки (oracle / bound / closed form), access structures.
"""

from src.ramp.access import (
    AccessStructure,
    access_structure,
    mutual_information_table,
    profile_from_mutual_information,
)
from src.ramp.profiles import (
    fengrao_profile,
    guaranteed_bits,
    hermitian_profile_closed,
    hermitian_ramp_profile,
    hermitian_scheme,
    leak_ceiling,
    mds_dual_rghw,
    mds_profile,
    mds_rghw,
    mds_scheme,
    oracle_profile,
    profile,
    worst_case_gap,
)
from src.ramp.scheme import (
    RampScheme,
    Reconstruction,
    SchemeOrigin,
    mutual_information,
    mutual_information_dual,
    mutual_information_primal,
    reconstruct,
    share,
    share_with_randomness,
)

__all__ = [
    # Scheme
    "RampScheme",
    "SchemeOrigin",
    "Reconstruction",
    "hermitian_scheme",
    "share",
    "share_with_randomness",
    "reconstruct",
    # Mutual information
    "mutual_information",
    "mutual_information_primal",
    "mutual_information_dual",
    "mutual_information_table",
    # Profiles
    "profile",
    "oracle_profile",
    "fengrao_profile",
    "hermitian_ramp_profile",
    "hermitian_profile_closed",
    "profile_from_mutual_information",
    "worst_case_gap",
    "leak_ceiling",
    "guaranteed_bits",
    # MDS
    "mds_scheme",
    "mds_profile",
    "mds_rghw",
    "mds_dual_rghw",
    # Access
    "AccessStructure",
    "access_structure",
]

"""
Linear codes module для RGHW-Ramp

Канонические коды над GF(q), дуальные коды, star product, quotient dimension
и точные RGHW/RDLP oracles.
"""

from src.codes.code_io import format_code, parse_code, parse_matrix, read_code_file, write_code_file
from src.codes.linear_code import (
    LinearCode,
    as_matrix,
    complement_columns,
    dual,
    full_space,
    reed_solomon_code,
    star_product,
    support_size,
    zero_code,
)
from src.codes.oracles import (
    ghw_oracle,
    rdlp,
    rdlp_profile,
    require_nested,
    rghw_from_rdlp,
    rghw_oracle,
    rghw_subspace_oracle,
    shortened_dim_quotient,
)

__all__ = [
    # Types
    "LinearCode",
    # Constructors
    "as_matrix",
    "zero_code",
    "full_space",
    "reed_solomon_code",
    # Operations
    "dual",
    "star_product",
    "support_size",
    "complement_columns",
    "shortened_dim_quotient",
    "require_nested",
    # Oracles
    "rghw_oracle",
    "ghw_oracle",
    "rdlp",
    "rdlp_profile",
    "rghw_from_rdlp",
    "rghw_subspace_oracle",
    # IO
    "parse_code",
    "parse_matrix",
    "format_code",
    "read_code_file",
    "write_code_file",
]

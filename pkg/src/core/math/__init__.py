"""
Core math modules для RGHW-Ramp

Линейная алгебра над GF(q) и минимизация по подмножествам индексов.
"""

# GF Linear Algebra
from src.core.math.gf_linalg import (
    in_row_space,
    inverse,
    kernel,
    pivot_completion,
    rank,
    row_spaces_equal,
    rref,
    solve_affine,
    stack,
)

# Subset Search
from src.core.math.subsets import (
    from_mask,
    min_over_subsets,
    min_union_cover,
    to_mask,
)

__all__ = [
    # GF Linear Algebra
    "rref",
    "rank",
    "kernel",
    "solve_affine",
    "inverse",
    "stack",
    "row_spaces_equal",
    "in_row_space",
    "pivot_completion",
    # Subset Search
    "to_mask",
    "from_mask",
    "min_union_cover",
    "min_over_subsets",
]

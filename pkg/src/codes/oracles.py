"""
RGHW / RDLP Oracles — точные значения полным перебором

M_m(C₁, C₂) = min{ #𝓘 : dim((C₁ ∩ V_𝓘)/(C₂ ∩ V_𝓘)) = m },
K_j(C₁, C₂) = max{ dim((C₁ ∩ V_𝓘)/(C₂ ∩ V_𝓘)) : #𝓘 = j }.

Oracle — эталон, против которого проверяются все границы. Перебор
экспоненциален: n ≤ max_oracle_length, q^{dim C₁} ≤ max_subspace_space.

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. Quotient dimension не убывает при расширении 𝓘 и растёт не более чем на 1
   за координату: на первой мощности с quotient ≥ m достигается ровно m
2. M_m = min{ j : K_j ≥ m }
3. Subset oracle совпадает с перебором подпространств D ⊆ C₁, D ∩ C₂ = {0}
"""

import logging
from itertools import combinations, product

import numpy as np

from src.codes.linear_code import LinearCode, complement_columns, support_size, zero_code
from src.core.domain import CoordinateSet
from src.core.errors import InvalidParameterError, NotSubcodeError
from src.core.limits import SearchLimits, ensure_within, resolve_limits
from src.core.math.gf_linalg import rank, stack

logger = logging.getLogger(__name__)


# =============================================================================
# QUOTIENT DIMENSION
# =============================================================================


def require_nested(c1: LinearCode, c2: LinearCode) -> None:
    """
    Raises:
        NotSubcodeError: C₂ ⊄ C₁
    """
    if not c1.contains(c2):
        raise NotSubcodeError(f"C2 (k={c2.k}) is not a subcode of C1 (k={c1.k})")


def _quotient(c1: LinearCode, c2: LinearCode, outside: np.ndarray) -> int:
    """dim(C₁ ∩ V_𝓘) − dim(C₂ ∩ V_𝓘) по столбцам вне 𝓘."""
    return c1.dim_supported_on(outside) - c2.dim_supported_on(outside)


def shortened_dim_quotient(
    c1: LinearCode, c2: LinearCode, coordinates: CoordinateSet, check: bool = True
) -> int:
    """
    dim((C₁ ∩ V_𝓘)/(C₂ ∩ V_𝓘)).

    Args:
        c1, c2: Коды с C₂ ⊆ C₁
        coordinates: Множество 𝓘
        check: Проверять вложенность рангом

    Raises:
        NotSubcodeError: C₂ ⊄ C₁
    """
    if check:
        require_nested(c1, c2)
    if coordinates.n != c1.n:
        raise InvalidParameterError(f"coordinate set length {coordinates.n} != code length {c1.n}")
    return _quotient(c1, c2, complement_columns(c1.n, coordinates))


def _outside(n: int, inside: tuple[int, ...]) -> np.ndarray:
    mask = np.ones(n, dtype=bool)
    mask[list(inside)] = False
    return np.flatnonzero(mask)


# =============================================================================
# SUBSET ORACLES
# =============================================================================


def rghw_oracle(
    c1: LinearCode, c2: LinearCode, m: int, limits: SearchLimits | None = None
) -> int:
    """
    Точный M_m(C₁, C₂) перебором 𝓘 по возрастанию мощности.

    Raises:
        InvalidParameterError: m вне [1, k₁ − k₂]
        SearchLimitExceeded: n > max_oracle_length
    """
    limits = resolve_limits(limits)
    require_nested(c1, c2)
    ell = c1.k - c2.k
    if not 1 <= m <= ell:
        raise InvalidParameterError(f"m={m} out of range [1, {ell}]")
    ensure_within("max_oracle_length", c1.n, limits.max_oracle_length)

    for size in range(m, c1.n + 1):
        for inside in combinations(range(c1.n), size):
            value = _quotient(c1, c2, _outside(c1.n, inside))
            if value >= m:
                # монотонность с шагом ≤ 1 гарантирует равенство на первой мощности
                assert value == m, f"quotient jumped to {value} at first cardinality {size}"
                logger.debug("rghw_oracle: M_%d = %d (witness %s)", m, size, inside)
                return size
    raise AssertionError(f"no coordinate set reaches quotient dimension {m}")


def ghw_oracle(code: LinearCode, m: int, limits: SearchLimits | None = None) -> int:
    """d_m(C) = M_m(C, {0})."""
    return rghw_oracle(code, zero_code(code.field, code.n), m, limits)


def rdlp(c1: LinearCode, c2: LinearCode, j: int, limits: SearchLimits | None = None) -> int:
    """
    Точный K_j(C₁, C₂) — максимум quotient dimension по 𝓘 мощности j.

    Raises:
        InvalidParameterError: j вне [0, n]
    """
    limits = resolve_limits(limits)
    require_nested(c1, c2)
    if not 0 <= j <= c1.n:
        raise InvalidParameterError(f"j={j} out of range [0, {c1.n}]")
    ensure_within("max_oracle_length", c1.n, limits.max_oracle_length)
    return max(_quotient(c1, c2, _outside(c1.n, inside)) for inside in combinations(range(c1.n), j))


def rdlp_profile(
    c1: LinearCode, c2: LinearCode, limits: SearchLimits | None = None
) -> list[int]:
    """[K_0, K_1, …, K_n] (полный перебор по каждой мощности)."""
    return [rdlp(c1, c2, j, limits) for j in range(c1.n + 1)]


def rghw_from_rdlp(profile: list[int], m: int) -> int:
    """M_m = min{ j : K_j ≥ m }."""
    for j, value in enumerate(profile):
        if value >= m:
            return j
    raise InvalidParameterError(f"RDLP never reaches {m}")


# =============================================================================
# SUBSPACE ORACLE
# =============================================================================


def _echelon_coefficients(q: int, k: int, m: int):  # type: ignore[no-untyped-def]
    """Все RREF-матрицы m×k ранга m над {0..q−1} (по одной на подпространство)."""
    for pivots in combinations(range(k), m):
        pivot_set = set(pivots)
        free = [(row, col) for row, p in enumerate(pivots) for col in range(p + 1, k) if col not in pivot_set]
        for values in product(range(q), repeat=len(free)):
            matrix = np.zeros((m, k), dtype=np.int64)
            for row, p in enumerate(pivots):
                matrix[row, p] = 1
            for (row, col), value in zip(free, values):
                matrix[row, col] = value
            yield matrix


def rghw_subspace_oracle(
    c1: LinearCode, c2: LinearCode, m: int, limits: SearchLimits | None = None
) -> int:
    """
    M_m(C₁, C₂) как min |Supp(D)| по m-мерным D ⊆ C₁ с D ∩ C₂ = {0}.

    Raises:
        SearchLimitExceeded: q^{dim C₁} > max_subspace_space
    """
    limits = resolve_limits(limits)
    require_nested(c1, c2)
    ell = c1.k - c2.k
    if not 1 <= m <= ell:
        raise InvalidParameterError(f"m={m} out of range [1, {ell}]")
    ensure_within("max_subspace_space", c1.field.order**c1.k, limits.max_subspace_space)

    best: int | None = None
    for coefficients in _echelon_coefficients(c1.field.order, c1.k, m):
        subspace = c1.field(coefficients) @ c1.generator
        joint = stack(c1.field.gf, [subspace, c2.generator], c1.n)
        if rank(joint) != m + c2.k:
            continue
        size = support_size(subspace)
        if best is None or size < best:
            best = size
    assert best is not None
    return best

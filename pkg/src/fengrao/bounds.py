"""
Feng-Rao RGHW bounds для произвольных линейных кодов

Primary: M_m(C₁, C₂) ≥ min |∪_{s} Λ_{i_s}| по {i₁ < ⋯ < i_m} ⊆ ρ̄(C₁∖{0}), i₁ ≥ u,
u = min(ρ̄(C₁) ∖ ρ̄(C₂)). Если C₂ — префикс ρ̄-упорядоченного базиса C₁,
множество кандидатов совпадает с ρ̄(C₁) ∖ ρ̄(C₂) (prefix flag в результате).

Dual: M_m(C₂^⊥, C₁^⊥) ≥ min |∪_{s} V_{i_s}| по {i₁ < ⋯ < i_m} ⊆ {1..u} ∖ ρ̄(C₂),
u = max ρ̄(C₁∖{0}).
"""

from dataclasses import dataclass

from src.codes.linear_code import LinearCode
from src.codes.oracles import require_nested
from src.core.errors import InvalidParameterError
from src.core.limits import SearchLimits, resolve_limits
from src.core.math.subsets import min_union_cover
from src.fengrao.ordered_basis import is_prefix_pair, rho_set
from src.fengrao.owb import OwbTable


@dataclass(frozen=True)
class FengRaoBound:
    """Значение границы и минимизирующее множество индексов (1-based)."""

    value: int
    indices: tuple[int, ...]
    candidates: tuple[int, ...]
    prefix: bool = False


def _check_pair(c1: LinearCode, c2: LinearCode, m: int) -> int:
    require_nested(c1, c2)
    ell = c1.k - c2.k
    if ell < 1:
        raise InvalidParameterError("C2 must be a proper subcode of C1")
    if not 1 <= m <= ell:
        raise InvalidParameterError(f"m={m} out of range [1, {ell}]")
    return ell


def rghw_bound_primary_argmin(
    table: OwbTable, c1: LinearCode, c2: LinearCode, m: int, limits: SearchLimits | None = None
) -> FengRaoBound:
    """Primary bound с минимизатором."""
    limits = resolve_limits(limits)
    _check_pair(c1, c2, m)
    rho1 = rho_set(table.basis, c1)
    rho2 = set(rho_set(table.basis, c2))
    u = min(i for i in rho1 if i not in rho2)
    candidates = tuple(i for i in rho1 if i >= u)
    value, choice = min_union_cover(
        [table.lambda_mask(i) for i in candidates], m, limits.max_index_subsets
    )
    return FengRaoBound(
        value=value,
        indices=tuple(candidates[c] for c in choice),
        candidates=candidates,
        prefix=is_prefix_pair(table.basis, c1, c2),
    )


def rghw_bound_primary(
    table: OwbTable, c1: LinearCode, c2: LinearCode, m: int, limits: SearchLimits | None = None
) -> int:
    """Нижняя граница M_m(C₁, C₂)."""
    return rghw_bound_primary_argmin(table, c1, c2, m, limits).value


def rghw_bound_dual_argmin(
    table: OwbTable, c1: LinearCode, c2: LinearCode, m: int, limits: SearchLimits | None = None
) -> FengRaoBound:
    """Dual bound с минимизатором."""
    limits = resolve_limits(limits)
    _check_pair(c1, c2, m)
    u = max(rho_set(table.basis, c1))
    excluded = set(rho_set(table.basis, c2))
    candidates = tuple(i for i in range(1, u + 1) if i not in excluded)
    value, choice = min_union_cover(
        [table.v_mask(i) for i in candidates], m, limits.max_index_subsets
    )
    return FengRaoBound(
        value=value, indices=tuple(candidates[c] for c in choice), candidates=candidates
    )


def rghw_bound_dual(
    table: OwbTable, c1: LinearCode, c2: LinearCode, m: int, limits: SearchLimits | None = None
) -> int:
    """Нижняя граница M_m(C₂^⊥, C₁^⊥)."""
    return rghw_bound_dual_argmin(table, c1, c2, m, limits).value

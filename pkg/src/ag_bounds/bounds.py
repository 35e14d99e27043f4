"""
One-Point RGHW Bounds — три уровня границы и дуальная граница

Для C₁ = C_𝓛(D, μ₁Q) ⊋ C₂ = C_𝓛(D, μ₂Q), кандидаты γ ∈ H* ∩ (μ₂, μ₁]:

    exact-set:  min |H* ∩ ∪_s (γ_{i_s} + H)|
    shifted:    min n − γ_{i_m} + #{λ ∈ ∪_{s<m}(γ_{i_s} + H) : λ ∉ γ_{i_m} + H}
    closed:     n − μ₁ + Z(H, μ₁ − μ₂, m)
    dual:       min |H ∩ ∪_s (γ_{i_s} − H)|   (для C₂^⊥ ⊋ C₁^⊥)

μ всегда нормализуется к max{γ ∈ H* : γ ≤ μ}; коды при этом не меняются,
а closed-уровень становится только сильнее.

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. closed ≤ shifted ≤ exact-set ≤ M_m(C₁, C₂)
2. closed при m = 1 даёт границу Goppa n − μ₁
3. tight ≥ relaxed для каждого γ-множества
"""

import logging
from math import comb

from src.ag_bounds.one_point import PoleOrderProfile
from src.core.domain import BoundReport, BoundTier
from src.core.errors import InvalidParameterError
from src.core.limits import SearchLimits, ensure_within, resolve_limits
from src.core.math.subsets import min_over_subsets, min_union_cover, to_mask
from src.semigroup import z_closed_form, z_function

logger = logging.getLogger(__name__)


# =============================================================================
# SUPPORT BOUNDS
# =============================================================================


def lemma1_sets(profile: PoleOrderProfile) -> tuple[frozenset[int], ...]:
    """
    {l : γ_l − γ_i ∈ H(Q)} для i = 1..n (1-based индексы).

    Подмножество Λ_i таблицы OWB на базисе ev(f_γ).
    """
    h_star = profile.h_star
    semigroup = profile.semigroup
    return tuple(
        frozenset(l + 1 for l, gamma_l in enumerate(h_star) if semigroup.contains(gamma_l - gamma_i))
        for gamma_i in h_star
    )


def _check_gamma_set(profile: PoleOrderProfile, gamma_set: tuple[int, ...]) -> None:
    if not gamma_set:
        raise InvalidParameterError("gamma set must be nonempty")
    if any(b <= a for a, b in zip(gamma_set, gamma_set[1:])):
        raise InvalidParameterError(f"gamma set must be strictly ascending, got {gamma_set}")
    outside = [g for g in gamma_set if not profile.in_h_star(g)]
    if outside:
        raise InvalidParameterError(f"gamma values {outside} are not in H*")


def _tight(profile: PoleOrderProfile, gamma_set: tuple[int, ...]) -> int:
    semigroup = profile.semigroup
    return sum(
        1 for h in profile.h_star if any(semigroup.contains(h - g) for g in gamma_set)
    )


def _relaxed(profile: PoleOrderProfile, gamma_set: tuple[int, ...]) -> int:
    semigroup = profile.semigroup
    top = gamma_set[-1]
    # λ ≥ top + c лежит в top + H
    escaped = sum(
        1
        for value in range(gamma_set[0], top + semigroup.conductor)
        if not semigroup.contains(value - top)
        and any(semigroup.contains(value - g) for g in gamma_set[:-1])
    )
    return profile.n - top + escaped


def support_bound_ag(profile: PoleOrderProfile, gamma_set: tuple[int, ...] | list[int]) -> tuple[int, int]:
    """
    (tight, relaxed) нижние границы |Supp(D)| для D с ρ̄-значениями γ_set.

    Raises:
        InvalidParameterError: Пустое, неупорядоченное множество или γ ∉ H*
    """
    gammas = tuple(gamma_set)
    _check_gamma_set(profile, gammas)
    tight = _tight(profile, gammas)
    relaxed = _relaxed(profile, gammas)
    assert tight >= relaxed, f"tight {tight} < relaxed {relaxed} for {gammas}"
    return tight, relaxed


# =============================================================================
# RGHW BOUNDS
# =============================================================================


def _normalized_pair(
    profile: PoleOrderProfile, mu1: int, mu2: int, m: int
) -> tuple[int, int, tuple[int, ...]]:
    if mu2 >= mu1:
        raise InvalidParameterError(f"need mu2 < mu1, got mu1={mu1}, mu2={mu2}")
    if mu2 < -1:
        raise InvalidParameterError(f"mu2 must be >= -1, got {mu2}")
    mu1_n, mu2_n = profile.normalize(mu1), profile.normalize(mu2)
    candidates = profile.candidates(mu1_n, mu2_n)
    if not candidates:
        raise InvalidParameterError(
            f"C(mu1={mu1}) = C(mu2={mu2}): no element of H* in ({mu2}, {mu1}]"
        )
    if not 1 <= m <= len(candidates):
        raise InvalidParameterError(f"m={m} out of range [1, {len(candidates)}]")
    return mu1_n, mu2_n, candidates


def closed_z(profile: PoleOrderProfile, mu: int, m: int, limits: SearchLimits | None = None) -> int:
    """
    Z(H, μ, m) для closed-уровня.

    Перебор, пока C(μ−1, m−1) в пределах лимита; иначе closed form для
    ⟨a, a+1⟩ при μ ≤ a+1.

    Raises:
        SearchLimitExceeded: Перебор вне лимита и closed form неприменима
    """
    limits = resolve_limits(limits)
    semigroup = profile.semigroup
    if m == 1 or comb(mu - 1, m - 1) <= limits.max_z_combinations:
        return z_function(semigroup, mu, m, limits)
    gens = semigroup.generators
    if len(gens) == 2 and gens[1] == gens[0] + 1 and mu <= gens[0] + 1:
        return z_closed_form(gens[0], mu, m)
    ensure_within("max_z_combinations", comb(mu - 1, m - 1), limits.max_z_combinations)
    raise AssertionError("unreachable")


def rghw_bound_onepoint(
    profile: PoleOrderProfile,
    mu1: int,
    mu2: int,
    m: int,
    tier: BoundTier | str = BoundTier.CLOSED,
    limits: SearchLimits | None = None,
) -> BoundReport:
    """
    Нижняя граница M_m(C(μ₁), C(μ₂)) выбранного уровня.

    Args:
        mu2: −1 означает C₂ = {0}
        tier: exact-set | shifted | closed

    Raises:
        InvalidParameterError: μ₂ ≥ μ₁, C(μ₁) = C(μ₂), m вне [1, ℓ]
    """
    limits = resolve_limits(limits)
    tier = BoundTier(tier)
    mu1_n, mu2_n, candidates = _normalized_pair(profile, mu1, mu2, m)

    argmin: tuple[int, ...] = ()
    if tier == BoundTier.EXACT_SET:
        index = {gamma: position for position, gamma in enumerate(profile.h_star)}
        semigroup = profile.semigroup
        masks = [
            to_mask(index[h] for h in profile.h_star if semigroup.contains(h - g))
            for g in candidates
        ]
        value, choice = min_union_cover(masks, m, limits.max_index_subsets)
        argmin = tuple(candidates[c] for c in choice)
    elif tier == BoundTier.SHIFTED:
        value, choice = min_over_subsets(
            len(candidates),
            m,
            lambda ch: _relaxed(profile, tuple(candidates[c] for c in ch)),
            limits.max_index_subsets,
        )
        argmin = tuple(candidates[c] for c in choice)
    elif tier == BoundTier.CLOSED:
        value = profile.n - mu1_n + closed_z(profile, mu1_n - mu2_n, m, limits)
    else:
        raise InvalidParameterError(f"tier {tier.value!r} is not a primary one-point tier")

    return BoundReport(
        mu1=mu1,
        mu2=mu2,
        mu1_normalized=mu1_n,
        mu2_normalized=mu2_n,
        m=m,
        tier=tier,
        value=value,
        argmin=argmin,
    )


def rghw_bound_onepoint_dual(
    profile: PoleOrderProfile,
    mu1: int,
    mu2: int,
    m: int,
    limits: SearchLimits | None = None,
) -> BoundReport:
    """
    Нижняя граница M_m(C(μ₂)^⊥, C(μ₁)^⊥): min |H ∩ ∪_s (γ_{i_s} − H)|.

    H ∩ (γ − H) ⊆ [0, γ], поэтому множества конечны.
    """
    limits = resolve_limits(limits)
    mu1_n, mu2_n, candidates = _normalized_pair(profile, mu1, mu2, m)
    semigroup = profile.semigroup
    masks = [
        to_mask(h for h in range(g + 1) if semigroup.contains(h) and semigroup.contains(g - h))
        for g in candidates
    ]
    value, choice = min_union_cover(masks, m, limits.max_index_subsets)
    return BoundReport(
        mu1=mu1,
        mu2=mu2,
        mu1_normalized=mu1_n,
        mu2_normalized=mu2_n,
        m=m,
        tier=BoundTier.DUAL,
        value=value,
        argmin=tuple(candidates[c] for c in choice),
    )


def onepoint_tiers(
    profile: PoleOrderProfile, mu1: int, mu2: int, m: int, limits: SearchLimits | None = None
) -> dict[BoundTier, BoundReport]:
    """Все три primary-уровня; проверяет порядок closed ≤ shifted ≤ exact-set."""
    reports = {
        tier: rghw_bound_onepoint(profile, mu1, mu2, m, tier, limits)
        for tier in (BoundTier.CLOSED, BoundTier.SHIFTED, BoundTier.EXACT_SET)
    }
    closed, shifted, exact = (reports[t].value for t in (BoundTier.CLOSED, BoundTier.SHIFTED, BoundTier.EXACT_SET))
    if not closed <= shifted <= exact:
        logger.warning(
            "tier order violated for (%d, %d, m=%d): closed=%d shifted=%d exact-set=%d",
            mu1, mu2, m, closed, shifted, exact,
        )
    return reports

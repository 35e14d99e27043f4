"""
Hermitian RGHW / GHW — closed form, уровни one-point и сравнение с GHW

    G₁(m, q) = Σ_{s=0}^{m−2} (q − s)
    M_m(C(μ₁), C(μ₂)) ≥ n − μ₁ + G₁(m, q)          при 1 ≤ μ₁ − μ₂ ≤ q + 1
    равенство при c − 1 ≤ μ₂ и μ₁ < n − c

    d_m(C(μ)) ≥ n − μ + ρ_m + α(μ),  α(μ) = #(H ∩ [0, μ]) − dim C(μ)

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. best = max(closed, exact-set, shifted, closed tier) — все значения нижние границы
2. GhwReport.equality ⟺ μ ∈ H*, n − μ + ρ_{m+α} ∈ H, (i ≤ q² − q − 1 или j = 0)
3. Diff(m, q) = G₁(m, q) − ρ_m > 0 для 3 ≤ m ≤ q + 1, q > 2
"""

import logging
from dataclasses import dataclass

from src.ag_bounds import PoleOrderProfile, onepoint_tiers
from src.core.domain import BoundReport, BoundTier, GhwReport
from src.core.errors import InvalidParameterError
from src.core.limits import SearchLimits
from src.hermitian.curve import HermitianFamily, decompose_pole_order
from src.semigroup import make_semigroup

logger = logging.getLogger(__name__)


# =============================================================================
# CLOSED FORMS
# =============================================================================


def g1(m: int, q: int) -> int:
    """G₁(m, q) = Σ_{s=0}^{m−2} (q − s), 1 ≤ m ≤ q + 1."""
    if not 1 <= m <= q + 1:
        raise InvalidParameterError(f"G1 needs 1 <= m <= q+1, got m={m}, q={q}")
    return q * (m - 1) - (m - 2) * (m - 1) // 2


def g2(m: int, mu_tilde: int, q: int) -> int:
    """
    G₂(m, μ̃, q) = c + μ̃ − 1 − Σ_{s=0}^{μ̃−m−1} (q − s), c = q(q−1).

    Верхний сдвиг r_m − (n − μ) для ramp-схем на Hermitian codes.
    """
    if not 1 <= m <= mu_tilde <= q + 1:
        raise InvalidParameterError(f"G2 needs 1 <= m <= mu_tilde <= q+1, got {m}, {mu_tilde}, {q}")
    return q * (q - 1) + mu_tilde - 1 - g1(mu_tilde - m + 1, q)


def diff_table(q: int, m_range: range | list[int] | None = None) -> dict[int, int]:
    """
    Diff(m, q) = G₁(m, q) − ρ_m.

    По умолчанию m = 3..q+1.
    """
    if q <= 2:
        raise InvalidParameterError(f"Diff(m, q) is defined for q > 2, got q={q}")
    semigroup = make_semigroup([q, q + 1])
    ms = list(m_range) if m_range is not None else list(range(3, q + 2))
    table = {m: g1(m, q) - semigroup.rho(m) for m in ms}
    for m, value in table.items():
        assert value > 0, f"Diff({m}, {q}) = {value} is not positive"
    return table


def prop5_region(q: int, mu: int) -> bool:
    """2q² − q ≤ μ ≤ n − c (q > 2): d_m = n − μ + ρ_m для m ≤ q + 1."""
    return q > 2 and 2 * q * q - q <= mu <= q**3 - q * (q - 1)


# =============================================================================
# RGHW
# =============================================================================


@dataclass(frozen=True)
class HermitianRghw:
    """
    Результат rghw_hermitian.

    closed = None, если μ₁ − μ₂ > q + 1 (closed form неприменима).
    """

    closed: int | None
    best: int
    equality: bool
    tiers: dict[BoundTier, BoundReport]


def _log_profile_override(family: HermitianFamily, profile: PoleOrderProfile) -> None:
    reference = set(family.profile.h_star)
    supplied = set(profile.h_star)
    if reference != supplied:
        logger.warning(
            "supplied H* differs from rank oracle: only supplied %s, only oracle %s",
            sorted(supplied - reference),
            sorted(reference - supplied),
        )


def rghw_hermitian(
    family: HermitianFamily,
    mu1: int,
    mu2: int,
    m: int,
    profile: PoleOrderProfile | None = None,
    limits: SearchLimits | None = None,
) -> HermitianRghw:
    """
    RGHW-граница для C(μ₁) ⊋ C(μ₂).

    Args:
        profile: Подменный H*-профиль (расхождение с rank oracle логируется)

    Raises:
        InvalidParameterError: μ₂ ≥ μ₁ или m вне диапазона
    """
    q, n, c = family.q, family.n, family.conductor
    own_profile = profile is None
    if profile is None:
        profile = family.profile
    else:
        _log_profile_override(family, profile)

    tiers = onepoint_tiers(profile, mu1, mu2, m, limits)

    closed: int | None = None
    if mu2 < 0:
        logger.warning("mu2 = %d < 0 (C2 = {0}): no closed form, using one-point tiers", mu2)
    elif mu1 - mu2 > q + 1:
        logger.warning(
            "mu1 - mu2 = %d > q + 1 = %d: no closed form, using one-point tiers",
            mu1 - mu2, q + 1,
        )
    else:
        closed = n - mu1 + g1(m, q)

    equality = closed is not None and c - 1 <= mu2 and mu1 < n - c
    values = [report.value for report in tiers.values()]
    if closed is not None:
        values.append(closed)
    best = max(values)
    if own_profile and equality and best != closed:
        raise AssertionError(f"tier value {best} exceeds the exact value {closed}")
    return HermitianRghw(closed=closed, best=best, equality=equality, tiers=tiers)


# =============================================================================
# GHW
# =============================================================================


def abundance(family: HermitianFamily, mu: int) -> int:
    """α(μ) = dim L(μQ) − dim C(μ) = #(H ∩ [0, μ]) − dim C(μ)."""
    if mu < 0:
        return 0
    return len(family.semigroup.elements_below(mu + 1)) - family.profile.dim(mu)


def ghw_master(family: HermitianFamily, mu: int, m: int) -> GhwReport:
    """
    Нижняя граница d_m(C(μ)) и флаг равенства.

    Raises:
        InvalidParameterError: m вне [1, dim C(μ)]
    """
    q, n = family.q, family.n
    semigroup = family.semigroup
    dim = family.profile.dim(mu)
    if not 1 <= m <= dim:
        raise InvalidParameterError(f"m={m} out of range [1, {dim}] for mu={mu}")

    alpha = abundance(family, mu)
    bound = n - mu + semigroup.rho(m) + alpha
    bound_shifted = n - mu + semigroup.rho(m + alpha)

    in_h_star = family.profile.in_h_star(mu)
    in_semigroup = semigroup.contains(bound_shifted)
    decomposition: tuple[int, int] | None = None
    decomposition_ok = False
    if in_semigroup:
        decomposition = decompose_pole_order(q, bound_shifted)
        i, j = decomposition
        decomposition_ok = i <= q * q - q - 1 or j == 0

    return GhwReport(
        q=q,
        mu=mu,
        m=m,
        abundance=alpha,
        bound=bound,
        bound_shifted=bound_shifted,
        mu_in_h_star=in_h_star,
        value_in_semigroup=in_semigroup,
        decomposition_ok=decomposition_ok,
        decomposition=decomposition,
        equality=in_h_star and in_semigroup and decomposition_ok,
    )


# =============================================================================
# PAIRS
# =============================================================================


def consecutive_pairs(profile: PoleOrderProfile, codim: int) -> list[tuple[int, int]]:
    """
    Все (μ₁, μ₂): μ₂ ∈ H* ∪ {−1}, μ₁ ∈ H*, ровно codim элементов H* в (μ₂, μ₁].

    По возрастанию μ₁.
    """
    if not 1 <= codim <= profile.n:
        raise InvalidParameterError(f"codim={codim} out of range [1, {profile.n}]")
    lower = (-1,) + profile.h_star
    return [
        (profile.h_star[index + codim - 1], lower[index])
        for index in range(profile.n - codim + 1)
    ]


def improvable_sets(profile: PoleOrderProfile, codim: int) -> tuple[list[int], list[int]]:
    """
    μ₁ из consecutive_pairs, для которых closed form может быть улучшена.

    S₁ (граница на t_m): μ₂ < c − 1 и окно μ₁, …, μ₁ − codim + 1 заходит ниже
    conductor (часть чисел окна может оказаться gaps), либо
    H* ∖ (μ₁ + H) ⊊ H ∖ (μ₁ + H).
    S₂ (граница на r_m): образ S₁ при μ₂^{(s)} ↦ μ₁^{(N+1−s)},
    т.е. C(μ₂^{(s)})^⊥ = C(μ₁^{(N+1−s)}).
    """
    pairs = consecutive_pairs(profile, codim)
    semigroup = profile.semigroup
    c = semigroup.conductor
    s1: list[int] = []
    for mu1, mu2 in pairs:
        below_conductor = mu2 < c - 1 and mu1 - (codim - 1) < c
        thinner = any(
            not profile.in_h_star(h) and not semigroup.contains(h - mu1)
            for h in semigroup.elements_below(mu1 + c)
        )
        if below_conductor or thinner:
            s1.append(mu1)
    members = set(s1)
    last = len(pairs) - 1
    s2 = sorted(pairs[last - index][0] for index, (mu1, _) in enumerate(pairs) if mu1 in members)
    return s1, s2

"""
Leakage Profiles — (t₁..t_ℓ)-privacy и (r₁..r_ℓ)-reconstruction

    t_m = M_m(C₂^⊥, C₁^⊥) − 1,   r_m = n − M_{ℓ−m+1}(C₁, C₂) + 1

Режимы:
    oracle — точные RGHW перебором (малые n);
    bound  — лучшие доступные нижние границы RGHW: t_m — нижние границы,
             r_m — верхние границы, затем монотонное замыкание.

Для Hermitian схем C(μ₂)^⊥ ⊋ C(μ₁)^⊥ дуальная сторона сводится к
C(n+c−2−μ₂) ⊋ C(n+c−2−μ₁) (самодуальность семейства).
"""

import logging

from src.ag_bounds import PoleOrderProfile, onepoint_tiers
from src.codes.linear_code import reed_solomon_code
from src.codes.oracles import rghw_oracle
from src.core.domain import LeakageProfile, Provenance
from src.core.errors import InvalidParameterError
from src.core.field import field_of_order
from src.core.limits import SearchLimits, resolve_limits
from src.fengrao import build_owb, rghw_bound_dual, rghw_bound_primary, standard_basis
from src.fengrao.ordered_basis import OrderedBasis
from src.hermitian.bounds import g1, g2
from src.hermitian.curve import HermitianFamily
from src.ramp.scheme import RampScheme, SchemeOrigin

logger = logging.getLogger(__name__)


# =============================================================================
# MDS
# =============================================================================


def mds_rghw(n: int, k1: int, k2: int, m: int) -> int:
    """M_m(C₁, C₂) = n − k₁ + m для MDS C₁."""
    _check_mds(n, k1, k2, m)
    return n - k1 + m


def mds_dual_rghw(n: int, k1: int, k2: int, m: int) -> int:
    """M_m(C₂^⊥, C₁^⊥) = k₂ + m для MDS C₂^⊥."""
    _check_mds(n, k1, k2, m)
    return k2 + m


def _check_mds(n: int, k1: int, k2: int, m: int) -> None:
    if not 0 <= k2 < k1 <= n:
        raise InvalidParameterError(f"need 0 <= k2 < k1 <= n, got n={n}, k1={k1}, k2={k2}")
    if not 1 <= m <= k1 - k2:
        raise InvalidParameterError(f"m={m} out of range [1, {k1 - k2}]")


def mds_scheme(q: int, n: int, k1: int, k2: int) -> RampScheme:
    """
    Вложенная пара Reed–Solomon RS(n, k₂) ⊊ RS(n, k₁) над GF(q).

    Raises:
        InvalidParameterError: n > q или k вне диапазона
    """
    _check_mds(n, k1, k2, 1)
    field = field_of_order(q)
    c1 = reed_solomon_code(field, n, k1)
    c2 = reed_solomon_code(field, n, k2)
    return RampScheme.from_codes(c1, c2, origin=SchemeOrigin(family="mds", q=q))


def mds_profile(n: int, k1: int, k2: int) -> LeakageProfile:
    """t_m = k₂ + m − 1, r_m = k₂ + m."""
    _check_mds(n, k1, k2, 1)
    ell = k1 - k2
    return LeakageProfile(
        n=n,
        ell=ell,
        t=tuple(k2 + m - 1 for m in range(1, ell + 1)),
        r=tuple(k2 + m for m in range(1, ell + 1)),
        t_provenance=(Provenance.EXACT_CLOSED,) * ell,
        r_provenance=(Provenance.EXACT_CLOSED,) * ell,
    )


def hermitian_scheme(family: HermitianFamily, mu1: int, mu2: int) -> RampScheme:
    """
    Схема C(μ₂)^⊥ ⊋ C(μ₁)^⊥ = C(n+c−2−μ₂) ⊋ C(n+c−2−μ₁).

    Raises:
        InvalidParameterError: C(μ₁) = C(μ₂)
    """
    offset = family.dual_offset
    return RampScheme.from_codes(
        family.code(offset - mu2),
        family.code(offset - mu1),
        origin=SchemeOrigin(family="hermitian", q=family.q, mu1=mu1, mu2=mu2),
    )


# =============================================================================
# ORACLE / BOUND PROFILES
# =============================================================================


def oracle_profile(scheme: RampScheme, limits: SearchLimits | None = None) -> LeakageProfile:
    """Точный профиль через rghw_oracle на обеих парах."""
    n, ell = scheme.n, scheme.ell
    c1, c2 = scheme.c1, scheme.c2
    t = tuple(rghw_oracle(c2.dual, c1.dual, m, limits) - 1 for m in range(1, ell + 1))
    r = tuple(n - rghw_oracle(c1, c2, ell - m + 1, limits) + 1 for m in range(1, ell + 1))
    return LeakageProfile(
        n=n,
        ell=ell,
        t=t,
        r=r,
        t_provenance=(Provenance.EXACT_ORACLE,) * ell,
        r_provenance=(Provenance.EXACT_ORACLE,) * ell,
    )


def _monotone_closure(n: int, ell: int, t: list[int], r: list[int]) -> tuple[list[int], list[int]]:
    """t_m ≥ max(m−1, t_{m−1}+1); r_m ≤ min(n−ℓ+m, r_{m+1}−1)."""
    t, r = list(t), list(r)
    for index in range(ell):
        floor = index if index == 0 else max(index, t[index - 1] + 1)
        t[index] = max(t[index], floor)
    for index in reversed(range(ell)):
        ceiling = n - ell + index + 1
        if index < ell - 1:
            ceiling = min(ceiling, r[index + 1] - 1)
        r[index] = min(r[index], ceiling)
    return t, r


def _best_onepoint(
    profile: PoleOrderProfile, q: int, mu1: int, mu2: int, m: int, limits: SearchLimits | None
) -> tuple[int, bool]:
    """(лучшая граница M_m(C(μ₁), C(μ₂)), точна ли она по closed form)."""
    values = [report.value for report in onepoint_tiers(profile, mu1, mu2, m, limits).values()]
    n, c = profile.n, profile.semigroup.conductor
    exact = False
    if mu2 >= 0 and 1 <= mu1 - mu2 <= q + 1:
        closed = n - mu1 + g1(m, q)
        values.append(closed)
        exact = c - 1 <= mu2 and mu1 < n - c
    return max(values), exact


def hermitian_ramp_profile(
    profile: PoleOrderProfile, q: int, mu1: int, mu2: int, limits: SearchLimits | None = None
) -> LeakageProfile:
    """
    Профиль схемы C(μ₂)^⊥ ⊋ C(μ₁)^⊥ для Hermitian C(μ₁) ⊋ C(μ₂).

    t_m = best M_m(C(μ₁), C(μ₂)) − 1,
    r_m = n − best M_{ℓ−m+1}(C(n+c−2−μ₂), C(n+c−2−μ₁)) + 1.

    Raises:
        InvalidParameterError: C(μ₁) = C(μ₂) или μ₂ ≥ μ₁
    """
    n = profile.n
    offset = n + profile.semigroup.conductor - 2
    ell = profile.dim(mu1) - profile.dim(mu2)
    if mu2 >= mu1 or ell < 1:
        raise InvalidParameterError(f"need C(mu1) strictly above C(mu2), got ({mu1}, {mu2})")

    t: list[int] = []
    t_exact: list[bool] = []
    r: list[int] = []
    r_exact: list[bool] = []
    for m in range(1, ell + 1):
        value, exact = _best_onepoint(profile, q, mu1, mu2, m, limits)
        t.append(value - 1)
        t_exact.append(exact)
        value, exact = _best_onepoint(profile, q, offset - mu2, offset - mu1, ell - m + 1, limits)
        r.append(n - value + 1)
        r_exact.append(exact)

    closed_t, closed_r = _monotone_closure(n, ell, t, r)
    if closed_t != t or closed_r != r:
        logger.debug("closure tightened (%d, %d): t %s -> %s, r %s -> %s", mu1, mu2, t, closed_t, r, closed_r)
    return LeakageProfile(
        n=n,
        ell=ell,
        t=tuple(closed_t),
        r=tuple(closed_r),
        t_provenance=tuple(Provenance.EXACT_CLOSED if e else Provenance.BOUND for e in t_exact),
        r_provenance=tuple(Provenance.EXACT_CLOSED if e else Provenance.BOUND for e in r_exact),
    )


def fengrao_profile(
    scheme: RampScheme, basis: OrderedBasis | None = None, limits: SearchLimits | None = None
) -> LeakageProfile:
    """
    Bound-профиль произвольной схемы через Feng-Rao границы.

    t_m + 1 ≥ max(dual bound на (C₁, C₂), primary bound на (C₂^⊥, C₁^⊥)),
    r_m ≤ n − primary bound на (C₁, C₂) для ℓ−m+1 + 1.

    Без basis берётся стандартный базис: Λ_i = {i}, и профиль совпадает
    с тривиальным t_m = m − 1, r_m = n − ℓ + m. Базис семейства
    передаётся явно (read_basis_file, HermitianFamily.basis).
    """
    limits = resolve_limits(limits)
    n, ell = scheme.n, scheme.ell
    c1, c2 = scheme.c1, scheme.c2
    table = build_owb(basis or standard_basis(scheme.field, n))
    t = [
        max(
            rghw_bound_dual(table, c1, c2, m, limits),
            rghw_bound_primary(table, c2.dual, c1.dual, m, limits),
        )
        - 1
        for m in range(1, ell + 1)
    ]
    r = [n - rghw_bound_primary(table, c1, c2, ell - m + 1, limits) + 1 for m in range(1, ell + 1)]
    t, r = _monotone_closure(n, ell, t, r)
    return LeakageProfile(
        n=n,
        ell=ell,
        t=tuple(t),
        r=tuple(r),
        t_provenance=(Provenance.BOUND,) * ell,
        r_provenance=(Provenance.BOUND,) * ell,
    )


def profile(
    scheme: RampScheme,
    mode: str = "oracle",
    limits: SearchLimits | None = None,
    basis: OrderedBasis | None = None,
    pole_profile: PoleOrderProfile | None = None,
) -> LeakageProfile:
    """
    Профиль утечки схемы.

    Args:
        mode: "oracle" | "bound"
        basis: Базис для Feng-Rao (bound, схема без известного происхождения)
        pole_profile: H*-профиль (bound, Hermitian схема)

    Raises:
        InvalidParameterError: Неизвестный режим или Hermitian схема без профиля
        SearchLimitExceeded: oracle при n > max_oracle_length
    """
    if mode == "oracle":
        return oracle_profile(scheme, limits)
    if mode != "bound":
        raise InvalidParameterError(f"unknown profile mode {mode!r}")

    origin = scheme.origin
    if origin.family == "hermitian":
        if pole_profile is None or origin.q is None or origin.mu1 is None or origin.mu2 is None:
            raise InvalidParameterError("hermitian bound profile needs the family's pole order profile")
        return hermitian_ramp_profile(pole_profile, origin.q, origin.mu1, origin.mu2, limits)
    if origin.family == "mds":
        return mds_profile(scheme.n, scheme.c1.k, scheme.c2.k)
    return fengrao_profile(scheme, basis, limits)


# =============================================================================
# HERMITIAN CLOSED FORMS
# =============================================================================


def hermitian_profile_closed(q: int, mu: int, mu_tilde: int) -> LeakageProfile:
    """
    t_m ≥ n − μ + G₁(m, q) − 1,  r_m ≤ n − μ + G₂(m, μ̃, q).

    Точно (EXACT_CLOSED) при 2c − 2 + μ̃ < μ < n − c.

    Raises:
        InvalidParameterError: μ̃ > q + 1 или μ вне [c − 1 + μ̃, n − 1]
    """
    n, c = q**3, q * (q - 1)
    if not 1 <= mu_tilde <= q + 1:
        raise InvalidParameterError(f"need 1 <= mu_tilde <= q+1, got {mu_tilde}")
    if not c - 1 + mu_tilde <= mu <= n - 1:
        raise InvalidParameterError(f"need {c - 1 + mu_tilde} <= mu <= {n - 1}, got {mu}")
    exact = 2 * c - 2 + mu_tilde < mu < n - c
    provenance = (Provenance.EXACT_CLOSED if exact else Provenance.BOUND,) * mu_tilde
    return LeakageProfile(
        n=n,
        ell=mu_tilde,
        t=tuple(n - mu + g1(m, q) - 1 for m in range(1, mu_tilde + 1)),
        r=tuple(n - mu + g2(m, mu_tilde, q) for m in range(1, mu_tilde + 1)),
        t_provenance=provenance,
        r_provenance=provenance,
    )


def worst_case_gap(q: int, mu_tilde: int, m: int) -> int:
    """r_m − (t_m + 1) в точной области: G₂(m, μ̃, q) − G₁(m, q)."""
    return g2(m, mu_tilde, q) - g1(m, q)


def leak_ceiling(profile: LeakageProfile, size: int) -> int:
    """Группа из size участников никогда не узнаёт больше стольких q-бит."""
    for m in range(1, profile.ell + 1):
        if size <= profile.t_m(m):
            return m - 1
    return profile.ell


def guaranteed_bits(profile: LeakageProfile, size: int) -> int:
    """Любая группа из size участников узнаёт не меньше стольких q-бит."""
    return max((m for m in range(1, profile.ell + 1) if profile.r_m(m) <= size), default=0)

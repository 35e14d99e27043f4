"""
Тесты для One-Point Codes и RGHW границ (exact-set / shifted / closed / dual)

Проверяемые инварианты:
1. H* rank oracle: |H*| = n, divisor-closed, dim C(μ) = #{γ ≤ μ}
2. closed ≤ shifted ≤ exact-set ≤ M_m(C(μ₁), C(μ₂))
3. closed при m = 1 — граница Goppa n − μ₁
4. Dual граница не выше M_m(C(μ₂)^⊥, C(μ₁)^⊥)
"""

import pytest

from src.ag_bounds import (
    PoleOrderProfile,
    closed_z,
    compute_h_star,
    lemma1_sets,
    onepoint_tiers,
    rghw_bound_onepoint,
    rghw_bound_onepoint_dual,
    support_bound_ag,
)
from src.codes import rdlp_profile, rghw_from_rdlp
from src.core.contracts import validate_bound_report
from src.core.domain import BoundTier
from src.core.errors import InconsistentFamilyError, InvalidParameterError, SearchLimitExceeded
from src.core.limits import SearchLimits
from src.fengrao import build_owb
from src.hermitian import build_hermitian
from src.semigroup import make_semigroup, z_function


@pytest.fixture
def family():
    """Hermitian q = 2: n = 8 над GF(4), H = ⟨2, 3⟩."""
    return build_hermitian(2)


@pytest.fixture
def profile(family):
    return family.profile


def _pairs(profile):
    """Все (μ₁, μ₂) с μ₂ ∈ H* ∪ {−1}, μ₁ ∈ H*, μ₂ < μ₁, не выше 7."""
    lows = (-1,) + profile.h_star
    return [(hi, lo) for lo in lows for hi in profile.h_star if lo < hi <= 7]


# =============================================================================
# ТЕСТЫ: Pole Order Profile
# =============================================================================


class TestPoleOrderProfile:
    """Тесты H* и операций профиля."""

    def test_rank_oracle_h_star(self, profile):
        """H* = {2i + 3j : i < 4, j < 2}."""
        assert profile.h_star == (0, 2, 3, 4, 5, 6, 7, 9)
        profile.validate()

    def test_dim_and_normalize(self, profile):
        """dim C(μ), max{γ ≤ μ}, индексы."""
        assert profile.dim(-1) == 0
        assert profile.dim(1) == 1
        assert profile.dim(8) == 7
        assert profile.normalize(-1) == -1
        assert profile.normalize(1) == 0
        assert profile.normalize(8) == 7
        assert profile.index_of(3) == 3
        assert profile.candidates(4, 2) == (3, 4)
        with pytest.raises(InvalidParameterError):
            profile.index_of(1)

    def test_dimension_matches_code(self, family, profile):
        """dim C(μ) из профиля = k построенного кода."""
        for mu in range(-1, 11):
            assert family.code(mu).k == profile.dim(mu)

    def test_not_divisor_closed(self, profile):
        """4 = 2 + 2, но 2 ∉ H*."""
        broken = PoleOrderProfile(
            n=8, semigroup=profile.semigroup, h_star=(0, 3, 4, 5, 6, 7, 8, 9)
        )
        with pytest.raises(InconsistentFamilyError):
            broken.validate()

    @pytest.mark.parametrize(
        "h_star",
        [(0, 2, 3), (0, 3, 2, 4, 5, 6, 7, 9), (0, 1, 2, 3, 4, 5, 6, 7)],
    )
    def test_invalid_profiles(self, profile, h_star):
        """Длина ≠ n, не возрастает, элемент вне H."""
        with pytest.raises(InvalidParameterError):
            PoleOrderProfile(n=8, semigroup=profile.semigroup, h_star=h_star)

    def test_rank_oracle_limit(self, family):
        """n = 8 > max_rank_oracle_length = 4."""
        with pytest.raises(SearchLimitExceeded):
            compute_h_star(
                family.field, 8, family.semigroup, family.evaluate,
                SearchLimits(max_rank_oracle_length=4),
            )

    def test_rank_oracle_exhausted(self, family):
        """Нулевые векторы никогда не дают ранг n."""
        with pytest.raises(InconsistentFamilyError):
            compute_h_star(family.field, 8, family.semigroup, lambda pole: family.field.zeros(8))


# =============================================================================
# ТЕСТЫ: Support Bounds
# =============================================================================


class TestSupportBound:
    """Тесты support_bound_ag и lemma1_sets."""

    def test_tight_at_least_relaxed(self, profile):
        """tight ≥ relaxed на всех парах γ."""
        for a in profile.h_star:
            for b in profile.h_star:
                if a < b:
                    tight, relaxed = support_bound_ag(profile, [a, b])
                    assert tight >= relaxed

    def test_single_gamma(self, profile):
        """Одно γ: relaxed = n − γ."""
        _, relaxed = support_bound_ag(profile, [5])
        assert relaxed == 3

    @pytest.mark.parametrize("gammas", [[], [3, 2], [1]])
    def test_invalid_gamma_sets(self, profile, gammas):
        """Пустое, не возрастающее, γ ∉ H*."""
        with pytest.raises(InvalidParameterError):
            support_bound_ag(profile, gammas)

    def test_lemma_sets_inside_owb_lambdas(self, family, profile):
        """{l : γ_l − γ_i ∈ H} ⊆ Λ_i таблицы OWB."""
        table = build_owb(family.basis)
        for i, lemma_set in enumerate(lemma1_sets(profile), start=1):
            assert i in lemma_set
            assert lemma_set <= table.lambda_set(i)


# =============================================================================
# ТЕСТЫ: Tiers
# =============================================================================


class TestTiers:
    """Тесты rghw_bound_onepoint и onepoint_tiers."""

    def test_tier_order_and_soundness(self, family, profile):
        """closed ≤ shifted ≤ exact-set ≤ oracle на всех парах q = 2."""
        for mu1, mu2 in _pairs(profile):
            c1, c2 = family.code(mu1), family.code(mu2)
            exact_profile = rdlp_profile(c1, c2)
            for m in range(1, c1.k - c2.k + 1):
                tiers = onepoint_tiers(profile, mu1, mu2, m)
                closed = tiers[BoundTier.CLOSED].value
                shifted = tiers[BoundTier.SHIFTED].value
                exact = tiers[BoundTier.EXACT_SET].value
                assert closed <= shifted <= exact <= rghw_from_rdlp(exact_profile, m)

    def test_dual_soundness(self, family, profile):
        """Dual ≤ M_m(C(μ₂)^⊥, C(μ₁)^⊥)."""
        for mu1, mu2 in _pairs(profile):
            c1, c2 = family.code(mu1), family.code(mu2)
            dual_profile = rdlp_profile(c2.dual, c1.dual)
            for m in range(1, c1.k - c2.k + 1):
                report = rghw_bound_onepoint_dual(profile, mu1, mu2, m)
                assert report.tier == BoundTier.DUAL
                assert report.value <= rghw_from_rdlp(dual_profile, m)

    def test_goppa_at_m_one(self, profile):
        """closed(m = 1) = n − μ₁ после нормализации."""
        report = rghw_bound_onepoint(profile, 8, 3, 1, BoundTier.CLOSED)
        assert report.mu1_normalized == 7
        assert report.mu2_normalized == 3
        assert report.value == 1

    def test_report_matches_schema(self, profile):
        """BoundReport сериализуется по bound_report.json."""
        report = rghw_bound_onepoint(profile, 7, 2, 2, "exact-set")
        validate_bound_report(report.model_dump(mode="json"))
        assert len(report.argmin) == 2

    def test_invalid_pairs(self, profile):
        """μ₂ ≥ μ₁, C(μ₁) = C(μ₂), m > ℓ, dual как primary уровень."""
        with pytest.raises(InvalidParameterError):
            rghw_bound_onepoint(profile, 3, 3, 1)
        with pytest.raises(InvalidParameterError):
            rghw_bound_onepoint(profile, 1, 0, 1)
        with pytest.raises(InvalidParameterError):
            rghw_bound_onepoint(profile, 4, 2, 3)
        with pytest.raises(InvalidParameterError):
            rghw_bound_onepoint(profile, 4, 2, 1, BoundTier.DUAL)


class TestClosedZ:
    """Тесты выбора перебор / closed form."""

    def test_falls_back_to_closed_form(self):
        """Для ⟨4, 5⟩ при превышении лимита используется формула."""
        profile = PoleOrderProfile(n=3, semigroup=make_semigroup([4, 5]), h_star=(0, 4, 5))
        limited = closed_z(profile, 5, 3, SearchLimits(max_z_combinations=1))
        assert limited == z_function(profile.semigroup, 5, 3) == 7

    def test_no_fallback_for_other_semigroups(self):
        """⟨3, 5⟩ без формулы: SearchLimitExceeded."""
        profile = PoleOrderProfile(n=3, semigroup=make_semigroup([3, 5]), h_star=(0, 3, 5))
        with pytest.raises(SearchLimitExceeded):
            closed_z(profile, 5, 3, SearchLimits(max_z_combinations=1))

"""
Тесты для Hermitian Curve, closed-form RGHW, GHW и witness functions

Проверяемые инварианты:
1. q³ точек на x^{q+1} = y^q + y, H* rank oracle = мономиальное описание
2. C(μ)^⊥ = C(n + c − 2 − μ)
3. Closed form n − μ₁ + G₁(m, q) — нижняя граница, равенство в окне c − 1 ≤ μ₂, μ₁ < n − c
4. Witness functions имеют ровно μ₁ − G₁(m, q) общих нулей
5. GHW: n − μ + ρ_m + α(μ) ≤ d_m, при флаге equality d_m = n − μ + ρ_{m+α}
"""

import numpy as np
import pytest

from src.codes import rdlp_profile, rghw_from_rdlp, zero_code
from src.core.domain import BoundTier
from src.core.errors import InvalidParameterError
from src.hermitian import (
    abundance,
    build_hermitian,
    consecutive_pairs,
    decompose_pole_order,
    diff_table,
    g1,
    g2,
    ghw_master,
    improvable_sets,
    monomial_h_star,
    prop5_region,
    rghw_hermitian,
    witness_functions,
)


@pytest.fixture
def family2():
    """q = 2: n = 8, c = 2."""
    return build_hermitian(2)


@pytest.fixture
def family4():
    """q = 4: n = 64 над GF(16), c = 12."""
    return build_hermitian(4)


# =============================================================================
# ТЕСТЫ: Curve
# =============================================================================


class TestCurve:
    """Тесты точек и pole orders."""

    @pytest.mark.parametrize("q", [2, 3])
    def test_point_count_and_equation(self, q):
        """q³ точек, каждая удовлетворяет уравнению кривой."""
        family = build_hermitian(q)
        assert len(family.xs) == q**3
        assert np.array_equal(family.xs ** (q + 1), family.ys**q + family.ys)
        points = set(zip(family.xs.tolist(), family.ys.tolist()))
        assert len(points) == q**3

    @pytest.mark.parametrize("q", [2, 3])
    def test_rank_oracle_agrees_with_monomials(self, q):
        """H* rank oracle = {qi + (q+1)j : i < q², j < q}."""
        family = build_hermitian(q)
        assert family.rank_oracle_agrees
        family.profile.validate()

    def test_curve_constants(self, family4):
        """g = 6, c = 12, n + c − 2 = 74."""
        assert (family4.n, family4.genus, family4.conductor) == (64, 6, 12)
        assert family4.dual_offset == 74

    def test_decompose_pole_order(self):
        """13 = 2·4 + 1·5; 11 — gap ⟨4, 5⟩."""
        assert decompose_pole_order(4, 13) == (2, 1)
        assert decompose_pole_order(4, 0) == (0, 0)
        with pytest.raises(InvalidParameterError):
            decompose_pole_order(4, 11)
        assert monomial_h_star(2) == (0, 2, 3, 4, 5, 6, 7, 9)

    def test_unsupported_q(self):
        """q = 6 не степень простого."""
        with pytest.raises(InvalidParameterError):
            build_hermitian(6)

    def test_duality(self, family2):
        """C(μ)^⊥ = C(8 − μ) при q = 2."""
        for mu in range(0, 9):
            assert family2.code(mu).dual == family2.code(family2.dual_offset - mu)


# =============================================================================
# ТЕСТЫ: Closed Forms
# =============================================================================


class TestClosedForms:
    """Тесты G₁, G₂, Diff, prop5_region."""

    def test_g1_values(self):
        """G₁(1, q) = 0, G₁(5, 4) = 4+3+2+1."""
        assert g1(1, 4) == 0
        assert g1(2, 4) == 4
        assert g1(3, 4) == 7
        assert g1(5, 4) == 10
        with pytest.raises(InvalidParameterError):
            g1(6, 4)

    def test_g2_values(self):
        """G₂(m, μ̃, q) = c + μ̃ − 1 − G₁(μ̃ − m + 1, q)."""
        assert g2(1, 1, 4) == 12
        assert g2(2, 2, 4) == 13
        assert g2(1, 3, 4) == 12 + 2 - 7
        with pytest.raises(InvalidParameterError):
            g2(3, 2, 4)

    def test_diff_table(self):
        """Diff(m, 4) = G₁ − ρ_m: 2, 1, 1."""
        assert diff_table(4) == {3: 2, 4: 1, 5: 1}
        with pytest.raises(InvalidParameterError):
            diff_table(2)

    def test_prop5_region(self):
        """2q² − q ≤ μ ≤ n − c, только q > 2."""
        assert prop5_region(4, 28)
        assert prop5_region(4, 52)
        assert not prop5_region(4, 27)
        assert not prop5_region(2, 5)


# =============================================================================
# ТЕСТЫ: RGHW
# =============================================================================


class TestRghwHermitian:
    """Тесты rghw_hermitian."""

    def test_pair_with_gaps(self, family4):
        """(12, 8): closed 52, 56, 59; shifted поднимает до 58, 60."""
        closed = [rghw_hermitian(family4, 12, 8, m).closed for m in (1, 2, 3)]
        best = [rghw_hermitian(family4, 12, 8, m).best for m in (1, 2, 3)]
        assert closed == [52, 56, 59]
        assert best == [52, 58, 60]

    def test_gap_free_pair(self, family4):
        """(10, 5): никакой уровень не лучше closed form."""
        for m, expected in zip((1, 2, 3), (54, 58, 61)):
            result = rghw_hermitian(family4, 10, 5, m)
            assert result.closed == result.best == expected
            assert result.tiers[BoundTier.SHIFTED].value == expected

    def test_equality_window(self, family2):
        """q = 2, (5, 2): closed = M_m точно."""
        c1, c2 = family2.code(5), family2.code(2)
        exact = rdlp_profile(c1, c2)
        for m in (1, 2, 3):
            result = rghw_hermitian(family2, 5, 2, m)
            assert result.equality
            assert result.closed == rghw_from_rdlp(exact, m)

    def test_two_step_pair(self, family2):
        """q = 2, (5, 3), m = 2: 3 + G₁(2, 2) = 5 = M₂."""
        result = rghw_hermitian(family2, 5, 3, 2)
        assert result.closed == 5
        assert result.equality
        assert rghw_from_rdlp(rdlp_profile(family2.code(5), family2.code(3)), 2) == 5

    @pytest.mark.parametrize("mu1, mu2", [(3, 0), (7, 4)])
    def test_closed_is_lower_bound(self, family2, mu1, mu2):
        """Вне окна равенства closed ≤ M_m."""
        c1, c2 = family2.code(mu1), family2.code(mu2)
        exact = rdlp_profile(c1, c2)
        for m in range(1, c1.k - c2.k + 1):
            result = rghw_hermitian(family2, mu1, mu2, m)
            assert not result.equality
            assert result.closed <= result.best <= rghw_from_rdlp(exact, m)

    def test_outside_closed_window(self, family4):
        """μ₁ − μ₂ > q + 1: closed = None, best из one-point уровней."""
        result = rghw_hermitian(family4, 12, 3, 1)
        assert result.closed is None
        assert not result.equality
        assert result.best == max(report.value for report in result.tiers.values())

    def test_warning_names_the_failed_condition(self, family4, caplog):
        """C₂ = {0} и широкий зазор дают разные предупреждения."""
        with caplog.at_level("WARNING", logger="src.hermitian.bounds"):
            result = rghw_hermitian(family4, 4, -1, 1)
        assert result.closed is None
        assert "mu2 = -1 < 0" in caplog.text
        assert "q + 1" not in caplog.text

        caplog.clear()
        with caplog.at_level("WARNING", logger="src.hermitian.bounds"):
            rghw_hermitian(family4, 12, 3, 1)
        assert "mu1 - mu2 = 9 > q + 1 = 5" in caplog.text
        assert "< 0" not in caplog.text


# =============================================================================
# ТЕСТЫ: GHW
# =============================================================================


class TestGhw:
    """Тесты abundance и ghw_master."""

    def test_abundance(self, family2):
        """α(μ) = 0 на H*, α(8) = 1."""
        assert abundance(family2, -1) == 0
        assert abundance(family2, 7) == 0
        assert abundance(family2, 8) == 1

    def test_master_against_oracle(self, family2):
        """Граница не выше d_m; equality ⇒ d_m = bound_shifted."""
        for mu in (0, 2, 3, 4, 5, 6, 7, 8):
            code = family2.code(mu)
            weights = rdlp_profile(code, zero_code(code.field, code.n))
            for m in range(1, code.k + 1):
                report = ghw_master(family2, mu, m)
                d_m = rghw_from_rdlp(weights, m)
                assert report.bound <= d_m
                if report.equality:
                    assert d_m == report.bound_shifted

    def test_constant_code(self, family2):
        """C(0) — повторение: d₁ = n, j = 0 ⇒ equality."""
        report = ghw_master(family2, 0, 1)
        assert report.equality
        assert report.bound_shifted == 8
        assert report.decomposition == (4, 0)

    def test_m_out_of_range(self, family2):
        """dim C(2) = 2."""
        with pytest.raises(InvalidParameterError):
            ghw_master(family2, 2, 3)


# =============================================================================
# ТЕСТЫ: Witness Functions
# =============================================================================


class TestWitnesses:
    """Тесты witness_functions на q = 4."""

    def test_regime_one(self, family4):
        """μ₁ = 23 = 2·4 + 3·5, m = 3: 16 общих нулей."""
        witnesses = witness_functions(family4, 23, 3)
        assert witnesses.regime == 1
        assert witnesses.common_zero_count == 16
        assert [f.pole_order for f in witnesses.functions] == [23, 22, 21]

    def test_regime_two(self, family4):
        """μ₁ = 20 = 5·4, m = 3: 13 общих нулей."""
        witnesses = witness_functions(family4, 20, 3)
        assert witnesses.regime == 2
        assert witnesses.common_zero_count == 13

    @pytest.mark.parametrize("mu1, m", [(23, 6), (52, 1), (12, 2)])
    def test_invalid_parameters(self, family4, mu1, m):
        """m > q + 1, μ₁ ≥ n − c, μ₁ − (m − 1) ≤ c − 1."""
        with pytest.raises(InvalidParameterError):
            witness_functions(family4, mu1, m)


# =============================================================================
# ТЕСТЫ: Consecutive Pairs
# =============================================================================


class TestConsecutivePairs:
    """Тесты consecutive_pairs / improvable_sets на q = 2."""

    def test_pairs(self, family2):
        """Ровно codim элементов H* в (μ₂, μ₁]."""
        pairs = consecutive_pairs(family2.profile, 2)
        assert pairs == [(2, -1), (3, 0), (4, 2), (5, 3), (6, 4), (7, 5), (9, 6)]
        with pytest.raises(InvalidParameterError):
            consecutive_pairs(family2.profile, 9)

    def test_dual_pairing(self, family2):
        """C(μ₂^{(s)})^⊥ = C(μ₁^{(N+1−s)})."""
        pairs = consecutive_pairs(family2.profile, 2)
        last = len(pairs) - 1
        for s, (_, mu2) in enumerate(pairs):
            assert family2.code(mu2).dual == family2.code(pairs[last - s][0])

    def test_improvable_sets(self, family2):
        """S₁: окно μ₁ заходит ниже c при μ₂ < c − 1, или H* тоньше H у μ₁."""
        s1, s2 = improvable_sets(family2.profile, 2)
        assert s1 == [2, 7, 9]
        assert s2 == [2, 3, 9]

    def test_improvable_sets_q4(self, family4):
        """q = 4, codim 3: окно (14, 10) целиком в H, 14 ∉ S₁ и 63 ∉ S₂."""
        s1, s2 = improvable_sets(family4.profile, 3)
        assert s1 == [5, 8, 9, 10, 12, 13, 53, 57, 58, 61, 62, 63, 65, 66, 67, 70, 71, 75]
        assert s2 == [5, 8, 9, 10, 12, 13, 14, 15, 16, 19, 20, 24, 65, 66, 67, 70, 71, 75]

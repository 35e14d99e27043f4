"""
Тесты для Ramp Schemes, взаимной информации и профилей утечки

Проверяемые инварианты:
1. share → reconstruct возвращает секрет при ≥ r_ℓ участниках
2. Две формулы I(S; X_𝓘) совпадают на всех коалициях
3. MDS: t_m = k₂ + m − 1, r_m = k₂ + m (oracle, MI-перебор и closed form совпадают)
4. Bound-профиль: t_m не выше точного, r_m не ниже точного
5. Hermitian closed form воспроизводит значения для GF(64) и GF(256)
"""

import numpy as np
import pytest

from src.codes import LinearCode
from src.core.domain import CoordinateSet, Provenance
from src.core.errors import (
    InconsistentSharesError,
    InvalidParameterError,
    NotSubcodeError,
    SearchLimitExceeded,
)
from src.core.field import make_field
from src.core.limits import SearchLimits
from src.hermitian import build_hermitian
from src.ramp import (
    RampScheme,
    access_structure,
    fengrao_profile,
    guaranteed_bits,
    hermitian_profile_closed,
    hermitian_scheme,
    leak_ceiling,
    mds_dual_rghw,
    mds_profile,
    mds_rghw,
    mds_scheme,
    mutual_information,
    mutual_information_table,
    oracle_profile,
    profile,
    profile_from_mutual_information,
    reconstruct,
    share,
    worst_case_gap,
)


@pytest.fixture
def mds():
    """RS[5, 3] ⊋ RS[5, 1] над GF(8): ℓ = 2."""
    return mds_scheme(8, 5, 3, 1)


@pytest.fixture
def ternary():
    """[6, 3] ⊋ [6, 1] над GF(3) без известного происхождения."""
    field = make_field(3)
    c1 = LinearCode.from_rows(
        field, [[1, 0, 0, 1, 1, 2], [0, 1, 0, 1, 2, 1], [0, 0, 1, 2, 1, 1]]
    )
    c2 = LinearCode.from_rows(field, c1.generator[:1], 6)
    return RampScheme.from_codes(c1, c2)


def _observed(shares, indices):
    values = shares.tolist()
    return {i: values[i - 1] for i in indices}


# =============================================================================
# ТЕСТЫ: Scheme Construction
# =============================================================================


class TestScheme:
    """Тесты RampScheme.from_codes."""

    def test_complement_spans_quotient(self, mds):
        """ℓ строк L, [L; G₂] порождает C₁."""
        assert mds.ell == 2
        assert mds.complement.shape == (2, 5)
        assert LinearCode.from_rows(mds.field, mds.joint_generator) == mds.c1

    def test_equal_codes_rejected(self, mds):
        """C₂ = C₁: секрет пустой."""
        with pytest.raises(InvalidParameterError):
            RampScheme.from_codes(mds.c1, mds.c1)

    def test_not_nested(self, mds):
        """C₁ ⊄ C₂."""
        with pytest.raises(NotSubcodeError):
            RampScheme.from_codes(mds.c2, mds.c1)

    def test_bad_complement(self, mds):
        """L из C₂ не дополняет C₂ до C₁."""
        with pytest.raises(InvalidParameterError):
            RampScheme.from_codes(mds.c1, mds.c2, complement=[[1, 1, 1, 1, 1], [1, 1, 1, 1, 1]])

    def test_mds_beyond_field(self):
        """n = 5 > q = 4."""
        with pytest.raises(InvalidParameterError):
            mds_scheme(4, 5, 3, 1)


# =============================================================================
# ТЕСТЫ: Share / Reconstruct
# =============================================================================


class TestShareReconstruct:
    """Тесты раздачи и восстановления."""

    def test_share_is_deterministic(self, mds):
        """Один seed — один вектор; вектор лежит в C₁."""
        first = share(mds, [3, 5], seed=7)
        second = share(mds, [3, 5], seed=7)
        assert np.array_equal(first, second)
        assert mds.c1.contains_vector(first)

    def test_full_reconstruction(self, mds):
        """r₂ = 3 участника восстанавливают секрет."""
        shares = share(mds, [3, 5], seed=11)
        result = reconstruct(mds, _observed(shares, [1, 3, 5]))
        assert result.determined == 2
        assert result.secret.tolist() == [3, 5]

    @pytest.mark.parametrize("indices, determined", [([2], 0), ([2, 4], 1), ([1, 2, 3, 4, 5], 2)])
    def test_partial_information(self, mds, indices, determined):
        """determined = I(S; X_𝓘) = min(ℓ, max(0, #𝓘 − k₂))."""
        shares = share(mds, [6, 1], seed=3)
        result = reconstruct(mds, _observed(shares, indices))
        assert result.determined == determined
        if determined < 2:
            assert result.secret is None

    def test_inconsistent_shares(self, mds):
        """Искажённая доля при наблюдении всех n координат."""
        shares = share(mds, [1, 2], seed=5)
        observed = _observed(shares, range(1, 6))
        observed[4] = (observed[4] + 1) % 8
        with pytest.raises(InconsistentSharesError):
            reconstruct(mds, observed)

    @pytest.mark.parametrize("observed", [{0: 1}, {6: 1}, {1: 8}])
    def test_invalid_observations(self, mds, observed):
        """Индекс вне [1, n] или значение вне поля."""
        with pytest.raises(InvalidParameterError):
            reconstruct(mds, observed)


# =============================================================================
# ТЕСТЫ: Mutual Information
# =============================================================================


class TestMutualInformation:
    """Тесты I(S; X_𝓘) и access structures."""

    def test_formulas_agree_on_all_coalitions(self, ternary):
        """Primal и dual формулы совпадают (иначе AssertionError)."""
        n = ternary.n
        for mask in range(1 << n):
            coordinates = CoordinateSet.from_zero_based(n, (i for i in range(n) if mask >> i & 1))
            assert 0 <= mutual_information(ternary, coordinates) <= ternary.ell

    def test_mds_table(self, mds):
        """MI = min(ℓ, max(0, #𝓘 − k₂))."""
        table = mutual_information_table(mds)
        for mask, value in enumerate(table):
            assert value == min(2, max(0, mask.bit_count() - 1))

    def test_complement_does_not_matter(self, mds):
        """Другое L для той же пары: та же таблица MI и то же determined."""
        rows = mds.complement
        other_rows = [(rows[0] + rows[1]).tolist(), (rows[1] + mds.c2.generator[0]).tolist()]
        other = RampScheme.from_codes(mds.c1, mds.c2, complement=other_rows)
        assert not np.array_equal(other.complement, mds.complement)

        table = mutual_information_table(mds)
        assert np.array_equal(mutual_information_table(other), table)
        shares = share(mds, [4, 2], seed=13)
        other_shares = share(other, [4, 2], seed=13)
        for mask in range(1, 1 << mds.n):
            indices = [i + 1 for i in range(mds.n) if mask >> i & 1]
            determined = reconstruct(mds, _observed(shares, indices)).determined
            assert reconstruct(other, _observed(other_shares, indices)).determined == determined
            assert determined == table[mask]

    def test_length_mismatch(self, mds):
        """𝓘 другой длины."""
        with pytest.raises(InvalidParameterError):
            mutual_information(mds, CoordinateSet.full(4))

    def test_table_limit(self, mds):
        """n = 5 > max_access_length = 4."""
        with pytest.raises(SearchLimitExceeded, match="max_access_length"):
            mutual_information_table(mds, SearchLimits(max_access_length=4))

    def test_access_structures(self, mds):
        """Все 2-множества дают ровно 1 символ и минимальны, и максимальны."""
        structure = access_structure(mds, 1, 2)
        assert len(structure.sets) == 10
        assert structure.minimal == structure.sets
        assert structure.maximal == structure.sets
        full = access_structure(mds, 2, 3)
        assert len(full.minimal) == 10
        assert full.maximal == ()
        assert access_structure(mds, 2, 2).sets == ()

    @pytest.mark.parametrize("m, d", [(3, 2), (1, 6), (-1, 2)])
    def test_access_structure_ranges(self, mds, m, d):
        """m вне [0, ℓ], d вне [0, n]."""
        with pytest.raises(InvalidParameterError):
            access_structure(mds, m, d)


# =============================================================================
# ТЕСТЫ: Profiles
# =============================================================================


class TestProfiles:
    """Тесты oracle / bound / MI профилей."""

    def test_mds_profiles_agree(self, mds):
        """Closed form = oracle = перебор MI."""
        expected = mds_profile(5, 3, 1)
        assert expected.t == (1, 2)
        assert expected.r == (2, 3)
        for computed in (oracle_profile(mds), profile_from_mutual_information(mds)):
            assert computed.t == expected.t
            assert computed.r == expected.r
        assert profile(mds, "bound").t == expected.t

    def test_mds_weights(self):
        """M_m = n − k₁ + m, дуальные k₂ + m."""
        assert [mds_rghw(5, 3, 1, m) for m in (1, 2)] == [3, 4]
        assert [mds_dual_rghw(5, 3, 1, m) for m in (1, 2)] == [2, 3]
        with pytest.raises(InvalidParameterError):
            mds_rghw(5, 3, 1, 3)

    def test_fengrao_profile_is_sound(self, ternary):
        """Bound-профиль не оптимистичнее точного."""
        bound = fengrao_profile(ternary)
        exact = oracle_profile(ternary)
        assert not bound.exact
        for m in range(1, ternary.ell + 1):
            assert bound.t_m(m) <= exact.t_m(m)
            assert bound.r_m(m) >= exact.r_m(m)

    def test_fengrao_profile_basis(self):
        """Стандартный базис даёт тривиальный профиль; базис мономов сужает r."""
        family = build_hermitian(2)
        scheme = RampScheme.from_codes(family.code(5), family.code(2))
        standard = fengrao_profile(scheme)
        assert standard.t == (0, 1, 2)
        assert standard.r == (6, 7, 8)

        curve = fengrao_profile(scheme, family.basis)
        assert all(a >= b for a, b in zip(curve.t, standard.t))
        assert all(a <= b for a, b in zip(curve.r, standard.r))
        assert curve.r[-1] <= 6

    def test_hermitian_bound_profile(self):
        """q = 2, (μ₁, μ₂) = (5, 2): t точен по closed form, r — граница."""
        family = build_hermitian(2)
        scheme = hermitian_scheme(family, 5, 2)
        bound = profile(scheme, "bound", pole_profile=family.profile)
        exact = oracle_profile(scheme)
        assert bound.ell == exact.ell == 3
        for m in range(1, 4):
            assert bound.t_m(m) <= exact.t_m(m)
            assert bound.r_m(m) >= exact.r_m(m)
            if bound.t_provenance[m - 1] == Provenance.EXACT_CLOSED:
                assert bound.t_m(m) == exact.t_m(m)
        assert bound.t_provenance == (Provenance.EXACT_CLOSED,) * 3

    def test_profile_mode_errors(self):
        """Неизвестный режим; Hermitian bound без H*-профиля."""
        family = build_hermitian(2)
        scheme = hermitian_scheme(family, 5, 2)
        with pytest.raises(InvalidParameterError):
            profile(scheme, "fast")
        with pytest.raises(InvalidParameterError):
            profile(scheme, "bound")


class TestHermitianClosedProfile:
    """Closed-form профили больших Hermitian схем."""

    def test_gf64(self):
        """q = 8, μ̃ = 9, n − μ = 130."""
        leak = hermitian_profile_closed(8, 512 - 130, 9)
        assert leak.exact
        assert (leak.t_m(1), leak.r_m(1)) == (129, 158)
        assert (leak.t_m(3) + 1, leak.r_m(3)) == (145, 161)
        assert (leak.t_m(9) + 1, leak.r_m(9)) == (166, 194)
        assert leak_ceiling(leak, 158) == 5
        assert guaranteed_bits(leak, 166) == 4
        assert worst_case_gap(8, 9, 1) == worst_case_gap(8, 9, 9) == 28

    def test_gf256(self):
        """q = 16, μ̃ = 16, n − μ = 300."""
        leak = hermitian_profile_closed(16, 4096 - 300, 16)
        assert leak.t_m(1) + 1 == 300
        assert leak.r_m(1) == 420
        assert leak.t_m(11) + 1 == 415
        assert leak.r_m(16) == 555
        assert guaranteed_bits(leak, 419) == 0
        assert guaranteed_bits(leak, 435) == 5
        assert leak_ceiling(leak, 435) == 16
        assert worst_case_gap(16, 16, 1) == 120

    def test_thresholds(self):
        """t = t₁, r = r_ℓ."""
        leak = hermitian_profile_closed(8, 382, 9)
        assert leak.privacy_threshold == 129
        assert leak.reconstruction_threshold == 194

    @pytest.mark.parametrize("mu, mu_tilde", [(382, 10), (63, 9), (512, 9)])
    def test_invalid_parameters(self, mu, mu_tilde):
        """μ̃ > q + 1, μ < c − 1 + μ̃, μ ≥ n."""
        with pytest.raises(InvalidParameterError):
            hermitian_profile_closed(8, mu, mu_tilde)

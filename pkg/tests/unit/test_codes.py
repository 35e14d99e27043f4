"""
Тесты для Linear Codes и RGHW/RDLP Oracles

Проверяемые инварианты:
1. Канонический RREF-генератор; dual(dual(C)) = C; G · G_dualᵀ = 0
2. MDS: d_m = n − k + m, M_m(C₁, C₂) = n − k₁ + m
3. Subset oracle = subspace oracle = min{ j : K_j ≥ m }
4. Вложенность C₂ ⊆ C₁ и лимиты проверяются до перебора
"""

import numpy as np
import pytest

from src.codes import (
    LinearCode,
    as_matrix,
    format_code,
    full_space,
    ghw_oracle,
    parse_code,
    rdlp,
    rdlp_profile,
    read_code_file,
    reed_solomon_code,
    rghw_from_rdlp,
    rghw_oracle,
    rghw_subspace_oracle,
    shortened_dim_quotient,
    star_product,
    support_size,
    write_code_file,
    zero_code,
)
from src.core.domain import CoordinateSet
from src.core.errors import (
    FieldMismatchError,
    InvalidParameterError,
    NotSubcodeError,
    SearchLimitExceeded,
)
from src.core.field import make_field
from src.core.limits import SearchLimits


@pytest.fixture
def gf8():
    return make_field(2, 3)


@pytest.fixture
def rs_pair(gf8):
    """RS[5, 3] ⊋ RS[5, 1] над GF(8)."""
    return reed_solomon_code(gf8, 5, 3), reed_solomon_code(gf8, 5, 1)


@pytest.fixture
def ternary_pair():
    """[6, 3] ⊋ [6, 1] над GF(3) (C₂ — первая строка генератора C₁)."""
    field = make_field(3)
    c1 = LinearCode.from_rows(
        field, [[1, 0, 0, 1, 1, 2], [0, 1, 0, 1, 2, 1], [0, 0, 1, 2, 1, 1]]
    )
    c2 = LinearCode.from_rows(field, c1.generator[:1], 6)
    return c1, c2


# =============================================================================
# ТЕСТЫ: LinearCode
# =============================================================================


class TestLinearCode:
    """Тесты канонической формы и дуального кода."""

    def test_dimensions(self, rs_pair):
        """k = число строк RREF."""
        c1, c2 = rs_pair
        assert (c1.n, c1.k) == (5, 3)
        assert (c2.n, c2.k) == (5, 1)

    def test_dependent_rows_collapse(self, gf8):
        """Зависимые строки не увеличивают k."""
        code = LinearCode.from_rows(gf8, [[1, 2, 3], [1, 2, 3], [0, 0, 1]])
        assert code.k == 2

    def test_dual_is_orthogonal(self, rs_pair):
        """G · G_dualᵀ = 0, k + k^⊥ = n, dual(dual(C)) = C."""
        c1, _ = rs_pair
        assert c1.dual.k == 2
        assert not np.any((c1.generator @ c1.dual.generator.T).view(np.ndarray))
        assert c1.dual.dual == c1

    def test_containment(self, rs_pair):
        """RS[5,1] ⊆ RS[5,3], но не наоборот."""
        c1, c2 = rs_pair
        assert c1.contains(c2)
        assert not c2.contains(c1)

    def test_zero_code_and_full_space(self, gf8):
        """{0}^⊥ = 𝔽^n."""
        assert zero_code(gf8, 4).k == 0
        assert full_space(gf8, 4).k == 4
        assert zero_code(gf8, 4).dual == full_space(gf8, 4)

    def test_codewords(self):
        """q^k слов, все лежат в коде."""
        field = make_field(2, 2)
        code = reed_solomon_code(field, 3, 2)
        words = code.codewords()
        assert words.shape == (16, 3)
        assert all(code.contains_vector(word) for word in words)
        with pytest.raises(SearchLimitExceeded):
            code.codewords(SearchLimits(max_codeword_enumeration=8))

    def test_reed_solomon_validation(self, gf8):
        """n ≤ q и 0 ≤ k ≤ n."""
        with pytest.raises(InvalidParameterError):
            reed_solomon_code(gf8, 9, 2)
        with pytest.raises(InvalidParameterError):
            reed_solomon_code(gf8, 5, 6)

    def test_as_matrix_rejects_foreign_rows(self, gf8):
        """Строки другого поля или другой длины."""
        with pytest.raises(FieldMismatchError):
            as_matrix(gf8, make_field(5)([[1, 2]]))
        with pytest.raises(FieldMismatchError):
            as_matrix(gf8, [[1, 2, 3]], n=4)

    def test_peer_check(self, rs_pair):
        """Коды разных длин несравнимы."""
        c1, _ = rs_pair
        with pytest.raises(FieldMismatchError):
            c1.contains(zero_code(c1.field, 4))


class TestStarProduct:
    """Тесты star product и support."""

    def test_componentwise(self):
        """(1,2,3) ∗ (2,2,2) = (2,4,1) над GF(5)."""
        field = make_field(5)
        result = star_product(field([1, 2, 3]), field([2, 2, 2]))
        assert result.view(np.ndarray).tolist() == [2, 4, 1]

    def test_operands_must_match(self):
        """Разные поля или длины."""
        gf5 = make_field(5)
        with pytest.raises(FieldMismatchError):
            star_product(gf5([1, 2]), make_field(7)([1, 2]))
        with pytest.raises(FieldMismatchError):
            star_product(gf5([1, 2]), gf5([1, 2, 3]))

    def test_support_size(self):
        """|Supp| = число ненулевых столбцов."""
        field = make_field(5)
        assert support_size(field([[1, 0, 0], [0, 0, 2]])) == 2
        assert support_size(field.zeros((0, 3))) == 0


# =============================================================================
# ТЕСТЫ: Code Files
# =============================================================================


class TestCodeFiles:
    """Тесты текстового формата кодов."""

    def test_parse(self):
        """Заголовок q n k и k строк."""
        code = parse_code("5 3 2\n1 0 1\n0 1 1\n")
        assert (code.field.order, code.n, code.k) == (5, 3, 2)

    def test_format_roundtrip(self, rs_pair, tmp_path):
        """write → read даёт тот же код."""
        c1, _ = rs_pair
        path = tmp_path / "rs.txt"
        write_code_file(c1, path)
        assert read_code_file(path) == c1
        assert format_code(c1).splitlines()[0] == "8 5 3"

    def test_zero_code_file(self, gf8, tmp_path):
        """k = 0: нулевой код {0}, запись и чтение."""
        code = parse_code("8 5 0\n")
        assert (code.n, code.k) == (5, 0)
        assert code == zero_code(gf8, 5)
        path = tmp_path / "zero.txt"
        write_code_file(code, path)
        assert read_code_file(path) == code

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "5 3\n1 0 1\n",
            "5 3 2\n1 0 1\n",
            "5 3 1\n1 0 7\n",
            "5 3 2\n1 1 1\n2 2 2\n",
            "5 3 2\n1 0 1\n0 1\n",
            "5 3 2\n1 0 1 0\n0 1\n",
            "5 3 1\n1 x 1\n",
            "5 3 4\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n",
        ],
    )
    def test_invalid_files(self, text):
        """Заголовок, число и длина строк, не числа, значения вне поля, зависимые строки."""
        with pytest.raises(InvalidParameterError):
            parse_code(text)


# =============================================================================
# ТЕСТЫ: Oracles
# =============================================================================


class TestOracles:
    """Тесты точных RGHW / RDLP."""

    def test_mds_generalized_weights(self, rs_pair):
        """RS[5,3]: d_m = n − k + m."""
        c1, _ = rs_pair
        assert [ghw_oracle(c1, m) for m in (1, 2, 3)] == [3, 4, 5]

    def test_mds_relative_weights(self, rs_pair):
        """M_m(RS[5,3], RS[5,1]) = 3, 4; дуальная пара 2, 3."""
        c1, c2 = rs_pair
        assert [rghw_oracle(c1, c2, m) for m in (1, 2)] == [3, 4]
        assert [rghw_oracle(c2.dual, c1.dual, m) for m in (1, 2)] == [2, 3]

    def test_rdlp_profile(self, rs_pair):
        """K_0 = 0, K_n = ℓ, M_m = min{ j : K_j ≥ m }."""
        c1, c2 = rs_pair
        profile = rdlp_profile(c1, c2)
        assert profile[0] == 0
        assert profile[-1] == 2
        assert all(b - a in (0, 1) for a, b in zip(profile, profile[1:]))
        for m in (1, 2):
            assert rghw_from_rdlp(profile, m) == rghw_oracle(c1, c2, m)
        with pytest.raises(InvalidParameterError):
            rghw_from_rdlp(profile, 3)

    def test_three_oracles_agree(self, ternary_pair):
        """Subset, subspace и RDLP oracles совпадают."""
        c1, c2 = ternary_pair
        profile = rdlp_profile(c1, c2)
        for m in range(1, c1.k - c2.k + 1):
            value = rghw_oracle(c1, c2, m)
            assert rghw_subspace_oracle(c1, c2, m) == value
            assert rghw_from_rdlp(profile, m) == value

    def test_relative_at_least_generalized(self, ternary_pair):
        """M_m(C₁, C₂) ≥ d_m(C₁)."""
        c1, c2 = ternary_pair
        for m in range(1, c1.k - c2.k + 1):
            assert rghw_oracle(c1, c2, m) >= ghw_oracle(c1, m)

    def test_quotient_extremes(self, rs_pair):
        """𝓘 = ∅ → 0, 𝓘 = все координаты → ℓ."""
        c1, c2 = rs_pair
        assert shortened_dim_quotient(c1, c2, CoordinateSet(n=5)) == 0
        assert shortened_dim_quotient(c1, c2, CoordinateSet.full(5)) == 2
        with pytest.raises(InvalidParameterError):
            shortened_dim_quotient(c1, c2, CoordinateSet.full(4))

    def test_not_nested(self, rs_pair):
        """C₂ ⊄ C₁."""
        c1, c2 = rs_pair
        with pytest.raises(NotSubcodeError):
            rghw_oracle(c2, c1, 1)

    def test_m_out_of_range(self, rs_pair):
        """m ≤ k₁ − k₂; j ≤ n."""
        c1, c2 = rs_pair
        with pytest.raises(InvalidParameterError):
            rghw_oracle(c1, c2, 3)
        with pytest.raises(InvalidParameterError):
            rdlp(c1, c2, 6)

    def test_oracle_length_limit(self, rs_pair):
        """n = 5 > max_oracle_length = 4."""
        c1, c2 = rs_pair
        with pytest.raises(SearchLimitExceeded, match="max_oracle_length"):
            rghw_oracle(c1, c2, 1, SearchLimits(max_oracle_length=4))

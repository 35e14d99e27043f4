"""
Тесты для FiniteField — GF(p^k) поверх galois

Проверяемые инварианты:
1. Фиксированный Conway-модуль, одно поле — один объект
2. Генератор мультипликативной группы имеет порядок q − 1
3. FieldElement: арифметика совпадает с galois, смешение полей — ошибка
4. Вложение GF(q) → GF(q²) — гомоморфизм колец, норма и след попадают в подполе
"""

import galois
import numpy as np
import pytest

from src.core.errors import FieldMismatchError, InvalidParameterError
from src.core.field import (
    FieldElement,
    field_of_order,
    frobenius,
    make_field,
    norm_trace,
    norm_trace_arrays,
    parse_field_spec,
)


@pytest.fixture
def gf16():
    return make_field(2, 4)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


# =============================================================================
# ТЕСТЫ: Construction
# =============================================================================


class TestConstruction:
    """Тесты make_field / field_of_order / parse_field_spec."""

    def test_same_object_for_same_parameters(self):
        """make_field кэширует поле по (p, k)."""
        assert make_field(3, 2) is make_field(3, 2)
        assert field_of_order(9) is make_field(3, 2)

    def test_order_and_name(self, gf16):
        """Порядок и имя поля."""
        assert gf16.order == 16
        assert gf16.name == "GF(2^4)"
        assert make_field(7).name == "GF(7)"

    def test_modulus_is_conway(self, gf16):
        """Модуль совпадает с Conway-полиномом galois."""
        conway = galois.conway_poly(2, 4)
        assert gf16.modulus == tuple(int(c) for c in conway.coeffs[::-1])
        # x^4 + x + 1
        assert gf16.modulus == (1, 1, 0, 0, 1)

    def test_generator_has_full_order(self):
        """Генератор порождает всю мультипликативную группу."""
        for p, k in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)]:
            field = make_field(p, k)
            assert int(field.gf(field.generator).multiplicative_order()) == field.order - 1

    def test_rejects_non_prime_characteristic(self):
        """Характеристика должна быть простой."""
        with pytest.raises(InvalidParameterError):
            make_field(4)

    def test_rejects_oversized_field(self):
        """Порядок ограничен 2^16."""
        with pytest.raises(InvalidParameterError):
            make_field(2, 17)

    def test_field_of_order_rejects_composite(self):
        """6 не степень простого."""
        with pytest.raises(InvalidParameterError):
            field_of_order(6)

    def test_parse_field_spec(self):
        """Литералы p^k и q."""
        assert parse_field_spec("2^4").order == 16
        assert parse_field_spec("9").order == 9
        with pytest.raises(InvalidParameterError):
            parse_field_spec("two")


# =============================================================================
# ТЕСТЫ: Arrays
# =============================================================================


class TestArrays:
    """Тесты конструкторов массивов и check_array."""

    def test_elements_in_encoding_order(self, gf16):
        """elements — кодировки 0..q−1."""
        assert gf16.elements.view(np.ndarray).tolist() == list(range(16))

    def test_random_is_reproducible(self, gf16):
        """Один seed — один массив."""
        first = gf16.random((3, 4), np.random.default_rng(7))
        second = gf16.random((3, 4), np.random.default_rng(7))
        assert np.array_equal(first, second)

    def test_check_array_rejects_plain_numpy(self, gf16):
        """numpy-массив без поля не принимается."""
        with pytest.raises(FieldMismatchError):
            gf16.check_array(np.zeros(3, dtype=np.int64))

    def test_check_array_rejects_other_field(self, gf16):
        """Массив другого поля не принимается."""
        with pytest.raises(FieldMismatchError):
            gf16.check_array(make_field(2, 3).zeros(3))


# =============================================================================
# ТЕСТЫ: FieldElement
# =============================================================================


class TestFieldElement:
    """Тесты скалярной арифметики."""

    def test_addition_in_characteristic_two_is_xor(self):
        """В GF(2^k) сложение кодировок — XOR."""
        field = make_field(2, 3)
        assert int(field.element(5) + field.element(3)) == 6

    def test_arithmetic_matches_galois(self, gf16, rng):
        """Случайные пары: +, −, ×, ÷ совпадают с galois."""
        for a, b in rng.integers(0, 16, size=(40, 2)):
            x, y = gf16.element(int(a)), gf16.element(int(b))
            ga, gb = gf16.gf(int(a)), gf16.gf(int(b))
            assert int(x + y) == int(ga + gb)
            assert int(x - y) == int(ga - gb)
            assert int(x * y) == int(ga * gb)
            if b:
                assert int(x / y) == int(ga / gb)

    def test_inverse(self, gf16):
        """e · e⁻¹ = 1 для всех ненулевых e."""
        for value in range(1, 16):
            e = gf16.element(value)
            assert int(e * e.inverse()) == 1

    def test_division_by_zero(self, gf16):
        """Деление на ноль — ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            gf16.element(3) / gf16.element(0)
        with pytest.raises(ZeroDivisionError):
            gf16.element(0) ** -1

    def test_mixed_fields_rejected(self, gf16):
        """Операция между разными полями — FieldMismatchError."""
        with pytest.raises(FieldMismatchError):
            gf16.element(1) + make_field(2, 2).element(1)

    def test_value_out_of_range(self, gf16):
        """Кодировка вне [0, q)."""
        with pytest.raises(InvalidParameterError):
            FieldElement(gf16, 16)

    def test_frobenius_fixes_prime_field(self):
        """x^p = x в GF(p)."""
        field = make_field(7)
        assert all(int(frobenius(field.element(v))) == v for v in range(7))


# =============================================================================
# ТЕСТЫ: Subfield, Norm, Trace
# =============================================================================


class TestSubfield:
    """Тесты вложения GF(q) → GF(q²), нормы и следа."""

    def test_odd_degree_has_no_subfield(self):
        """GF(2^3) не квадратичное расширение."""
        field = make_field(2, 3)
        assert field.subfield is None
        with pytest.raises(InvalidParameterError):
            norm_trace(field.element(3))

    def test_embedding_is_ring_homomorphism(self, gf16):
        """embed(a·b) = embed(a)·embed(b), embed(a+b) = embed(a)+embed(b)."""
        embedding = gf16.subfield
        small = embedding.subfield
        assert small.order == 4
        for a in range(4):
            for b in range(4):
                left = int(embedding.embed([int(small.gf(a) * small.gf(b))])[0])
                right = int(gf16.gf(int(embedding.embed([a])[0])) * gf16.gf(int(embedding.embed([b])[0])))
                assert left == right
                left = int(embedding.embed([int(small.gf(a) + small.gf(b))])[0])
                right = int(gf16.gf(int(embedding.embed([a])[0])) + gf16.gf(int(embedding.embed([b])[0])))
                assert left == right

    def test_project_inverts_embed(self, gf16):
        """project(embed(a)) = a; элемент вне подполя — ошибка."""
        embedding = gf16.subfield
        assert embedding.project(embedding.embed(np.arange(4))).tolist() == [0, 1, 2, 3]
        outside = next(v for v in range(16) if v not in set(embedding.embedding.tolist()))
        with pytest.raises(InvalidParameterError):
            embedding.project([outside])

    def test_norm_and_trace_fibers(self, gf16):
        """|N⁻¹(1)| = q + 1, |Tr⁻¹(0)| = q."""
        norms, traces = norm_trace_arrays(gf16, gf16.elements)
        assert int(np.count_nonzero(norms.view(np.ndarray) == 1)) == 5
        assert int(np.count_nonzero(traces.view(np.ndarray) == 0)) == 4

    def test_norm_trace_of_one(self, gf16):
        """N(1) = 1, Tr(1) = 1 + 1 = 0 в характеристике 2."""
        norm, trace = norm_trace(gf16.element(1))
        assert norm.field.order == 4
        assert int(norm) == 1
        assert int(trace) == 0

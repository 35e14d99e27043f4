"""
FiniteField — арифметика GF(p^k) для алфавитов кодов и схем

Поле строится поверх galois (lookup tables для q ≤ 2^16) с фиксированным
Conway-модулем, поэтому кодировки элементов (целые в [0, q), полином Σ a_i x^i
кодируется как Σ a_i p^i) воспроизводимы между запусками и платформами.

Векторы и матрицы над полем — экземпляры galois.FieldArray класса `field.gf`.
Скаляры API — FieldElement (поле + каноническое целое).

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. Модуль неприводим (проверка trial division по всем monic делителям степени ≤ k/2)
2. Хранимый генератор мультипликативной группы имеет порядок ровно q − 1
3. Операции между разными полями — ошибка FieldMismatchError, никогда не coercion
4. Для чётного k вложение GF(p^{k/2}) → GF(p^k) вычисляется один раз и кэшируется
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Final

import galois
import numpy as np

from src.core.errors import FieldMismatchError, InvalidParameterError

logger = logging.getLogger(__name__)


# =============================================================================
# CONSTANTS
# =============================================================================

# Максимальный порядок поля (log/antilog tables)
MAX_FIELD_ORDER: Final[int] = 2**16


# =============================================================================
# MODULUS HELPERS
# =============================================================================


def _canonical_modulus(p: int, k: int) -> galois.Poly:
    """Conway-полином степени k над GF(p); primitive_poly, если его нет в базе."""
    try:
        return galois.conway_poly(p, k)
    except LookupError:
        logger.warning("No Conway polynomial for GF(%d^%d), using primitive_poly", p, k)
        return galois.primitive_poly(p, k)


def _verify_irreducible(modulus: galois.Poly, p: int, k: int) -> None:
    """
    Trial division модуля по всем monic полиномам степени 1..k//2.

    Monic полиномы степени d — это целые коды [p^d, 2p^d) в galois.Poly.Int.

    Raises:
        InvalidParameterError: Если найден нетривиальный делитель
    """
    prime_field = galois.GF(p)
    for degree in range(1, k // 2 + 1):
        for code in range(p**degree, 2 * p**degree):
            divisor = galois.Poly.Int(code, field=prime_field)
            remainder = modulus % divisor
            if remainder.nonzero_coeffs.size == 0:
                raise InvalidParameterError(
                    f"modulus {modulus} of GF({p}^{k}) is divisible by {divisor}"
                )


def _verify_generator(gf: Any, order: int) -> int:
    """Проверка, что primitive_element имеет порядок ровно q − 1."""
    generator = gf.primitive_element
    if order > 2:
        primes, _ = galois.factors(order - 1)
        for r in primes:
            if generator ** ((order - 1) // int(r)) == 1:
                raise InvalidParameterError(
                    f"stored generator {int(generator)} of GF({order}) has order < {order - 1}"
                )
    return int(generator)


# =============================================================================
# SUBFIELD EMBEDDING
# =============================================================================


@dataclass(frozen=True)
class SubfieldEmbedding:
    """
    Вложение GF(q) → GF(q²).

    root — корень модуля GF(q) в GF(q²) (наименьшая кодировка);
    embedding[a] — образ элемента a подполя;
    projection[b] — прообраз элемента b или −1, если b не лежит в подполе.
    """

    subfield: "FiniteField"
    root: int
    embedding: np.ndarray
    projection: np.ndarray

    def embed(self, values: Any) -> np.ndarray:
        """Кодировки подполя → кодировки большого поля."""
        return self.embedding[np.asarray(values, dtype=np.int64)]

    def project(self, values: Any) -> np.ndarray:
        """Кодировки большого поля → кодировки подполя (ошибка вне подполя)."""
        result = self.projection[np.asarray(values, dtype=np.int64)]
        if np.any(result < 0):
            raise InvalidParameterError("value does not lie in the registered subfield")
        return result


# =============================================================================
# FINITE FIELD
# =============================================================================


@dataclass(frozen=True, eq=False)
class FiniteField:
    """
    Конечное поле GF(p^k).

    Создаётся только через make_field (кэш по (p, k)), поэтому одно поле —
    один объект и один galois-класс `gf`.
    """

    p: int
    k: int
    gf: Any = field(repr=False)
    generator: int = field(repr=False)

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def modulus(self) -> tuple[int, ...]:
        """Коэффициенты модуля от младшего к старшему."""
        coeffs = self.gf.irreducible_poly.coeffs.view(np.ndarray)
        return tuple(int(c) for c in coeffs[::-1])

    @property
    def name(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    # -------------------------------------------------------------------------
    # Array constructors
    # -------------------------------------------------------------------------

    def __call__(self, values: Any) -> Any:
        """Вектор/матрица над полем из целых кодировок."""
        return self.gf(values)

    def vector(self, values: Any) -> Any:
        """Одномерный вектор над полем."""
        return self.gf(values).reshape(-1)

    def zeros(self, shape: int | tuple[int, ...]) -> Any:
        return self.gf.Zeros(shape)

    def ones(self, shape: int | tuple[int, ...]) -> Any:
        return self.gf.Ones(shape)

    def identity(self, n: int) -> Any:
        return self.gf.Identity(n)

    @property
    def elements(self) -> Any:
        """Все элементы в порядке кодировок 0..q−1."""
        return self.gf.elements

    def random(self, shape: int | tuple[int, ...], rng: np.random.Generator) -> Any:
        """Равномерно случайный массив из переданного генератора."""
        return self.gf(rng.integers(0, self.order, size=shape))

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, int(value))

    def check_array(self, values: Any) -> None:
        """
        Проверка, что массив принадлежит этому полю.

        Raises:
            FieldMismatchError: Если массив из другого поля или не FieldArray
        """
        if type(values) is not self.gf:
            raise FieldMismatchError(
                f"expected an array over {self.name}, got {type(values).__name__}"
            )

    # -------------------------------------------------------------------------
    # Subfield, norm, trace
    # -------------------------------------------------------------------------

    @cached_property
    def subfield(self) -> SubfieldEmbedding | None:
        """Вложение GF(p^{k/2}) для чётного k, иначе None."""
        if self.k % 2:
            return None
        small = make_field(self.p, self.k // 2)
        small_modulus = small.gf.irreducible_poly.coeffs.view(np.ndarray)
        lifted = galois.Poly([int(c) for c in small_modulus], field=self.gf)
        root = int(lifted.roots().view(np.ndarray).min())

        # vector() отдаёт коэффициенты от старшего к младшему
        digits = small.gf.elements.vector().view(np.ndarray)[:, ::-1]
        powers = self.gf([int(self.gf(root) ** i) for i in range(small.k)])
        embedding = (self.gf(np.ascontiguousarray(digits)) @ powers).view(np.ndarray)
        embedding = embedding.astype(np.int64)

        projection = np.full(self.order, -1, dtype=np.int64)
        projection[embedding] = np.arange(small.order)
        return SubfieldEmbedding(
            subfield=small, root=root, embedding=embedding, projection=projection
        )

    def _require_subfield(self) -> SubfieldEmbedding:
        embedding = self.subfield
        if embedding is None:
            raise InvalidParameterError(f"{self.name} is not a quadratic extension")
        return embedding

    def norm(self, values: Any) -> Any:
        """N(e) = e^{q+1}, значения остаются в большом поле."""
        q = self._require_subfield().subfield.order
        return values ** (q + 1)

    def trace(self, values: Any) -> Any:
        """Tr(e) = e^q + e, значения остаются в большом поле."""
        q = self._require_subfield().subfield.order
        return values**q + values


# =============================================================================
# FIELD ELEMENT
# =============================================================================


@dataclass(frozen=True)
class FieldElement:
    """Скаляр поля: владеющее поле + каноническое целое в [0, q)."""

    field: FiniteField
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.order:
            raise InvalidParameterError(
                f"value {self.value} out of range for {self.field.name}"
            )

    def _peer(self, other: object) -> "FieldElement":
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldMismatchError(f"operand is not an element of {self.field.name}")
        return other

    def _wrap(self, result: Any) -> "FieldElement":
        return FieldElement(self.field, int(result))

    @property
    def _raw(self) -> Any:
        return self.field.gf(self.value)

    def __add__(self, other: object) -> "FieldElement":
        return self._wrap(self._raw + self._peer(other)._raw)

    def __sub__(self, other: object) -> "FieldElement":
        return self._wrap(self._raw - self._peer(other)._raw)

    def __mul__(self, other: object) -> "FieldElement":
        return self._wrap(self._raw * self._peer(other)._raw)

    def __truediv__(self, other: object) -> "FieldElement":
        divisor = self._peer(other)
        if divisor.value == 0:
            raise ZeroDivisionError(f"division by zero in {self.field.name}")
        return self._wrap(self._raw / divisor._raw)

    def __neg__(self) -> "FieldElement":
        return self._wrap(-self._raw)

    def __pow__(self, exponent: int) -> "FieldElement":
        if self.value == 0 and exponent < 0:
            raise ZeroDivisionError(f"zero has no inverse in {self.field.name}")
        return self._wrap(self._raw**exponent)

    def inverse(self) -> "FieldElement":
        return self**-1

    def __int__(self) -> int:
        return self.value

    def is_zero(self) -> bool:
        return self.value == 0


# =============================================================================
# CONSTRUCTION
# =============================================================================


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FiniteField:
    """
    Построение GF(p^k) с фиксированным модулем.

    Args:
        p: Характеристика (простое)
        k: Степень расширения (≥ 1)

    Returns:
        FiniteField (один и тот же объект для одинаковых (p, k))

    Raises:
        InvalidParameterError: p не простое, k < 1 или p^k > 2^16
    """
    if not galois.is_prime(p):
        raise InvalidParameterError(f"characteristic must be prime, got {p}")
    if k < 1:
        raise InvalidParameterError(f"extension degree must be >= 1, got {k}")
    order = p**k
    if order > MAX_FIELD_ORDER:
        raise InvalidParameterError(f"field order {order} exceeds cap {MAX_FIELD_ORDER}")

    if k == 1:
        gf = galois.GF(p)
    else:
        modulus = _canonical_modulus(p, k)
        _verify_irreducible(modulus, p, k)
        gf = galois.GF(order, irreducible_poly=modulus)
    generator = _verify_generator(gf, order)
    logger.info("Built GF(%d^%d) with modulus %s", p, k, gf.irreducible_poly)
    return FiniteField(p=p, k=k, gf=gf, generator=generator)


def field_of_order(q: int) -> FiniteField:
    """GF(q) для prime power q."""
    if q < 2:
        raise InvalidParameterError(f"field order must be a prime power >= 2, got {q}")
    primes, exponents = galois.factors(q)
    if len(primes) != 1:
        raise InvalidParameterError(f"field order must be a prime power, got {q}")
    return make_field(int(primes[0]), int(exponents[0]))


def parse_field_spec(text: str) -> FiniteField:
    """
    Разбор CLI-литерала поля: "p^k" или порядок "q".

    Examples:
        >>> parse_field_spec("2^4").order
        16
        >>> parse_field_spec("9").order
        9
    """
    try:
        if "^" in text:
            base, exponent = text.split("^", 1)
            return make_field(int(base), int(exponent))
        return field_of_order(int(text))
    except ValueError as exc:
        if isinstance(exc, InvalidParameterError):
            raise
        raise InvalidParameterError(f"cannot parse field spec {text!r}") from exc


def norm_trace(e: FieldElement) -> tuple[FieldElement, FieldElement]:
    """
    Норма и след элемента GF(q²) в подполе GF(q).

    N(e) = e^{q+1}, Tr(e) = e^q + e; оба значения проецируются в подполе.

    Raises:
        InvalidParameterError: Поле элемента не является квадратичным расширением
    """
    big = e.field
    embedding = big._require_subfield()
    raw = big.gf(e.value)
    norm_value = int(embedding.project([int(big.norm(raw))])[0])
    trace_value = int(embedding.project([int(big.trace(raw))])[0])
    small = embedding.subfield
    return FieldElement(small, norm_value), FieldElement(small, trace_value)


def norm_trace_arrays(field: FiniteField, values: Any) -> tuple[Any, Any]:
    """Векторизованные N и Tr; результат остаётся в большом поле."""
    field.check_array(values)
    return field.norm(values), field.trace(values)


def frobenius(e: FieldElement) -> FieldElement:
    """x ↦ x^p."""
    return e**e.field.p

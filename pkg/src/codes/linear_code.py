"""
LinearCode — линейный код над GF(q) в канонической форме

Код хранится как RREF генераторной матрицы (без нулевых строк), поэтому
равенство кодов — равенство матриц. Дуальный код кэшируется.

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. generator — RREF полного ранга, k = число строк
2. dual(dual(C)) = C как row space; G · G_dualᵀ = 0
3. dim(C ∩ V_𝓘) = k − rank(G|_{𝓘̄}) (kernel-of-projection, одно исключение)
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any

import galois
import numpy as np

from src.core.domain import CoordinateSet
from src.core.errors import FieldMismatchError, InvalidParameterError
from src.core.field import FiniteField
from src.core.limits import SearchLimits, ensure_within, resolve_limits
from src.core.math.gf_linalg import in_row_space, kernel, rank, rref


def as_matrix(field: FiniteField, rows: Any, n: int | None = None) -> Any:
    """Строки (FieldArray или вложенные списки целых) → FieldArray формы (r, n)."""
    if isinstance(rows, field.gf):
        matrix = rows
    elif isinstance(rows, galois.FieldArray):
        raise FieldMismatchError(f"rows are not over {field.name}")
    else:
        matrix = field(np.asarray(rows, dtype=np.int64))
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1) if matrix.size or n is None else matrix.reshape(0, n)
    if n is not None and matrix.shape[0] == 0:
        matrix = matrix.reshape(0, n)
    if n is not None and matrix.shape[1] != n:
        raise FieldMismatchError(f"expected rows of length {n}, got {matrix.shape[1]}")
    return matrix


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Линейный [n, k] код: RREF генератор и pivot-столбцы."""

    field: FiniteField
    n: int
    generator: Any
    pivots: tuple[int, ...]

    @classmethod
    def from_rows(cls, field: FiniteField, rows: Any, n: int | None = None) -> "LinearCode":
        """Код как row space переданных строк (линейная зависимость допускается)."""
        matrix = as_matrix(field, rows, n)
        reduced, pivots = rref(matrix)
        return cls(field=field, n=int(matrix.shape[1]), generator=reduced, pivots=pivots)

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    @cached_property
    def dual(self) -> "LinearCode":
        """C^⊥ = правое ядро генератора."""
        return LinearCode.from_rows(self.field, kernel(self.generator), self.n)

    def _check_peer(self, other: "LinearCode") -> None:
        if other.field != self.field or other.n != self.n:
            raise FieldMismatchError(
                f"codes differ: {self.field.name}^{self.n} vs {other.field.name}^{other.n}"
            )

    def contains(self, other: "LinearCode") -> bool:
        """other ⊆ self (rank test)."""
        self._check_peer(other)
        return other.k == 0 or in_row_space(self.generator, other.generator)

    def contains_vector(self, vector: Any) -> bool:
        self.field.check_array(vector)
        return in_row_space(self.generator, vector.reshape(1, -1))

    def same_space(self, other: "LinearCode") -> bool:
        self._check_peer(other)
        return self.k == other.k and np.array_equal(
            self.generator.view(np.ndarray), other.generator.view(np.ndarray)
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearCode) and other.field == self.field and (
            other.n == self.n and self.same_space(other)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.generator.view(np.ndarray).tobytes()))

    def encode(self, message: Any) -> Any:
        """message · G."""
        return message @ self.generator

    def dim_supported_on(self, complement_columns: Any) -> int:
        """dim(C ∩ V_𝓘) по столбцам дополнения 𝓘̄ (0-based)."""
        return self.k - rank(self.generator[:, complement_columns])

    def codewords(self, limits: SearchLimits | None = None) -> Any:
        """Все q^k кодовых слов (в порядке лексикографии сообщений)."""
        limits = resolve_limits(limits)
        ensure_within(
            "max_codeword_enumeration", self.field.order**self.k, limits.max_codeword_enumeration
        )
        if self.k == 0:
            return self.field.zeros((1, self.n))
        grids = np.meshgrid(*[np.arange(self.field.order)] * self.k, indexing="ij")
        messages = np.stack([g.reshape(-1) for g in grids], axis=1)
        return self.field(messages) @ self.generator


# =============================================================================
# CONSTRUCTORS
# =============================================================================


def zero_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode.from_rows(field, field.zeros((0, n)), n)


def full_space(field: FiniteField, n: int) -> LinearCode:
    return LinearCode.from_rows(field, field.identity(n), n)


def reed_solomon_code(field: FiniteField, n: int, k: int) -> LinearCode:
    """
    RS-код: вычисления x^i (i < k) в первых n элементах поля (кодировки 0..n−1).

    Raises:
        InvalidParameterError: n > q или k вне [0, n]
    """
    if n > field.order:
        raise InvalidParameterError(f"Reed-Solomon length {n} exceeds field order {field.order}")
    if not 0 <= k <= n:
        raise InvalidParameterError(f"Reed-Solomon dimension {k} not in [0, {n}]")
    points = field(np.arange(n))
    rows = field.ones((k, n))
    for i in range(1, k):
        rows[i] = rows[i - 1] * points
    return LinearCode.from_rows(field, rows, n)


# =============================================================================
# OPERATIONS
# =============================================================================


def dual(code: LinearCode) -> LinearCode:
    """Дуальный код (кэшируется в объекте)."""
    return code.dual


def star_product(u: Any, v: Any) -> Any:
    """
    Покоординатное произведение (α₁β₁, …, αₙβₙ).

    Raises:
        FieldMismatchError: разные поля или длины
    """
    if type(u) is not type(v):
        raise FieldMismatchError("star product operands are over different fields")
    if u.shape != v.shape:
        raise FieldMismatchError(f"star product length mismatch: {u.shape} vs {v.shape}")
    return u * v


def support_size(vectors: Any) -> int:
    """|Supp(D)| для набора строк, порождающих D."""
    if vectors.size == 0:
        return 0
    return int(np.count_nonzero(np.any(vectors.reshape(-1, vectors.shape[-1]).view(np.ndarray) != 0, axis=0)))


def complement_columns(n: int, coordinates: CoordinateSet) -> np.ndarray:
    """0-based столбцы вне 𝓘."""
    mask = np.ones(n, dtype=bool)
    mask[coordinates.zero_based()] = False
    return np.flatnonzero(mask)

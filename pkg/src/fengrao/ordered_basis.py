"""
OrderedBasis — фиксированный упорядоченный базис ℬ = {b₁, …, bₙ} пространства 𝔽_q^n

ρ̄(c) — наибольший индекс ненулевой координаты c в базисе ℬ (0 для c = 0).
Координаты считаются одним умножением на предвычисленную обратную матрицу.

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. rank(ℬ) = n
2. ρ̄(b_i) = i
3. ρ̄(C∖{0}) = pivot-множество генератора C в ℬ-координатах при исключении справа;
   |ρ̄(D∖{0})| = dim D
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from src.codes.code_io import parse_matrix
from src.codes.linear_code import LinearCode, as_matrix
from src.core.errors import FieldMismatchError, InvalidParameterError
from src.core.field import FiniteField
from src.core.math.gf_linalg import inverse, rank, rref


@dataclass(frozen=True, eq=False)
class OrderedBasis:
    """Упорядоченный базис с матрицей перехода к координатам."""

    field: FiniteField
    vectors: Any
    inverse: Any
    basis_id: str = "custom"

    @classmethod
    def from_vectors(cls, field: FiniteField, vectors: Any, basis_id: str = "custom") -> "OrderedBasis":
        """
        Raises:
            InvalidParameterError: Векторы не образуют базис 𝔽_q^n
        """
        matrix = as_matrix(field, vectors)
        n = matrix.shape[1]
        if matrix.shape[0] != n or rank(matrix) != n:
            raise InvalidParameterError(
                f"basis must consist of {n} independent vectors, got shape {matrix.shape}"
            )
        return cls(field=field, vectors=matrix, inverse=inverse(matrix), basis_id=basis_id)

    @property
    def n(self) -> int:
        return int(self.vectors.shape[0])

    def coordinates(self, vectors: Any) -> Any:
        """Координаты строк в базисе ℬ: c = x·B ⇒ x = c·B⁻¹."""
        self.field.check_array(vectors)
        if vectors.shape[-1] != self.n:
            raise FieldMismatchError(f"vector length {vectors.shape[-1]} != basis length {self.n}")
        return vectors @ self.inverse

    def rho_bar_many(self, vectors: Any) -> np.ndarray:
        """ρ̄ для каждой строки (1-based, 0 для нулевой строки)."""
        matrix = vectors.reshape(-1, self.n)
        nonzero = self.coordinates(matrix).view(np.ndarray) != 0
        last = self.n - np.argmax(nonzero[:, ::-1], axis=1)
        return np.where(nonzero.any(axis=1), last, 0).astype(np.int64)

    def rho_bar(self, vector: Any) -> int:
        return int(self.rho_bar_many(vector.reshape(1, -1))[0])


def rho_bar(basis: OrderedBasis, vector: Any) -> int:
    """ρ̄(c) относительно ℬ."""
    return basis.rho_bar(vector)


def standard_basis(field: FiniteField, n: int) -> OrderedBasis:
    """
    e₁, …, eₙ.

    Для него Λ_i = V_i = {i}: обе границы Feng-Rao равны m. Содержательные
    значения дают базисы семейства (значения функций в точках кривой).
    """
    return OrderedBasis.from_vectors(field, field.identity(n), basis_id="standard")


def read_basis_file(path: str | Path) -> OrderedBasis:
    """
    Базис из файла в формате code files: заголовок "q n n", строки b₁, …, bₙ по порядку.

    Raises:
        InvalidParameterError: Неверный файл или строки не образуют базис
    """
    field, n, matrix = parse_matrix(Path(path).read_text(encoding="utf-8"))
    if matrix.shape[0] != n:
        raise InvalidParameterError(f"basis file needs n={n} rows, got {matrix.shape[0]}")
    return OrderedBasis.from_vectors(field, matrix, basis_id=Path(path).stem)


def write_basis_file(basis: OrderedBasis, path: str | Path) -> None:
    lines = [f"{basis.field.order} {basis.n} {basis.n}"]
    for row in basis.vectors.view(np.ndarray):
        lines.append(" ".join(str(int(v)) for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def rho_set(basis: OrderedBasis, code: LinearCode) -> list[int]:
    """
    ρ̄(C∖{0}) по возрастанию.

    Исключение по развёрнутым столбцам: первый ненулевой столбец строки RREF
    развёрнутой матрицы — последний ненулевой индекс исходной.
    """
    if code.field != basis.field or code.n != basis.n:
        raise FieldMismatchError("code and basis live in different spaces")
    if code.k == 0:
        return []
    coords = basis.coordinates(code.generator)
    _, pivots = rref(coords[:, ::-1].copy())
    return sorted(basis.n - p for p in pivots)


def is_prefix_pair(basis: OrderedBasis, c1: LinearCode, c2: LinearCode) -> bool:
    """
    C₂ — span первых k₂ векторов ρ̄-упорядоченного базиса C₁.

    Для C₂ ⊆ C₁ это эквивалентно ρ̄(C₂) = k₂ наименьших значений ρ̄(C₁).
    """
    return rho_set(basis, c2) == rho_set(basis, c1)[: c2.k]

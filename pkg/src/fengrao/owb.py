"""
OwbTable — one-way well-behaving пары и множества Λ_i, V_l

(i, j) OWB ⟺ ρ̄(b_{i'} ∗ b_j) < ρ̄(b_i ∗ b_j) для всех i' < i.
l ∈ Λ_i ⟺ ∃ j: (i, j) OWB и ρ̄(b_i ∗ b_j) = l;  i ∈ V_l ⟺ l ∈ Λ_i.

Построение O(n³): n² произведений, ρ̄ всех произведений одним умножением
на B⁻¹ (по блокам строк).
"""

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from src.core.errors import InvalidParameterError
from src.core.math.subsets import to_mask
from src.fengrao.ordered_basis import OrderedBasis

logger = logging.getLogger(__name__)

# Число произведений на один блок умножения
_PRODUCT_BLOCK = 4096


@dataclass(frozen=True)
class OwbTable:
    """
    Таблица OWB для базиса.

    products_rho[i−1, j−1] = ρ̄(b_i ∗ b_j); owb[i−1, j−1] — флаг OWB.
    lambdas[i−1] = Λ_i, v_sets[l−1] = V_l (значения 1-based).
    """

    basis: OrderedBasis
    products_rho: np.ndarray
    owb: np.ndarray
    lambdas: tuple[frozenset[int], ...]
    v_sets: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return self.basis.n

    def lambda_set(self, i: int) -> frozenset[int]:
        return self.lambdas[i - 1]

    def v_set(self, l: int) -> frozenset[int]:  # noqa: E741
        return self.v_sets[l - 1]

    def lambda_mask(self, i: int) -> int:
        return to_mask(self.lambdas[i - 1])

    def v_mask(self, l: int) -> int:  # noqa: E741
        return to_mask(self.v_sets[l - 1])

    def to_json_dict(self) -> dict[str, Any]:
        """Экспорт для отладки (схема owb_table)."""
        return {
            "basis_id": self.basis.basis_id,
            "n": self.n,
            "owb_pairs": int(self.owb.sum()),
            "lambda": {str(i + 1): sorted(s) for i, s in enumerate(self.lambdas)},
            "v": {str(l + 1): sorted(s) for l, s in enumerate(self.v_sets)},  # noqa: E741
        }


def _product_rho(basis: OrderedBasis) -> np.ndarray:
    n = basis.n
    vectors = basis.vectors
    rho = np.empty(n * n, dtype=np.int64)
    pairs = [(i, j) for i in range(n) for j in range(n)]
    for start in range(0, n * n, _PRODUCT_BLOCK):
        block = pairs[start : start + _PRODUCT_BLOCK]
        left = vectors[[i for i, _ in block]]
        right = vectors[[j for _, j in block]]
        rho[start : start + len(block)] = basis.rho_bar_many(left * right)
    return rho.reshape(n, n)


def build_owb(basis: OrderedBasis) -> OwbTable:
    """
    Полная n×n таблица OWB с материализованными Λ_i и V_l.

    Для i = 1 условие OWB пусто (истинно), но l = 0 (нулевое произведение)
    в Λ_i не попадает: Λ_i ⊆ {1, …, n}.
    """
    n = basis.n
    products_rho = _product_rho(basis)

    running_max = np.maximum.accumulate(products_rho, axis=0)
    previous_max = np.vstack([np.full((1, n), -1, dtype=np.int64), running_max[:-1]])
    owb = products_rho > previous_max

    lambdas = tuple(
        frozenset(int(l) for l in products_rho[i][owb[i]] if l >= 1) for i in range(n)  # noqa: E741
    )
    v_sets = tuple(
        frozenset(
            i + 1 for i in range(n) if np.any(owb[i] & (products_rho[i] == l))
        )
        for l in range(1, n + 1)  # noqa: E741
    )
    for i in range(1, n + 1):
        for l in range(1, n + 1):  # noqa: E741
            assert (i in v_sets[l - 1]) == (l in lambdas[i - 1]), f"V/Λ asymmetry at ({i}, {l})"

    logger.debug("build_owb(%s): n=%d, %d OWB pairs", basis.basis_id, n, int(owb.sum()))
    return OwbTable(
        basis=basis, products_rho=products_rho, owb=owb, lambdas=lambdas, v_sets=v_sets
    )


def support_lower_bound(table: OwbTable, rho_values: set[int] | frozenset[int] | list[int]) -> int:
    """
    |∪_{i ∈ ρ̄(D)} Λ_i| — нижняя граница |Supp(D)|.

    Raises:
        InvalidParameterError: Пустое множество индексов
    """
    values = set(rho_values)
    if not values:
        raise InvalidParameterError("rho set must be nonempty")
    if min(values) < 1 or max(values) > table.n:
        raise InvalidParameterError(f"rho values must lie in [1, {table.n}]")
    union: frozenset[int] = frozenset()
    for i in values:
        union |= table.lambda_set(i)
    return len(union)

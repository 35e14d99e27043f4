"""
CoordinateSet — подмножество координат 𝓘 ⊆ {1, …, n}

Индексы во внешнем API 1-based (как в определении V_𝓘); внутренние
алгоритмы работают с 0-based numpy-индексами через zero_based().
"""

from collections.abc import Iterable

import numpy as np
from pydantic import BaseModel, Field, model_validator


class CoordinateSet(BaseModel):
    """
    Упорядоченное подмножество координат.

    Инварианты: индексы строго возрастают и лежат в [1, n].
    """

    n: int = Field(..., ge=0, description="Длина кода")
    indices: tuple[int, ...] = Field(default=(), description="Индексы 1..n, строго возрастают")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def validate_indices(self) -> "CoordinateSet":
        previous = 0
        for index in self.indices:
            if index <= previous or index > self.n:
                raise ValueError(
                    f"indices must be strictly increasing within [1, {self.n}], got {self.indices}"
                )
            previous = index
        return self

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "CoordinateSet":
        """Из произвольного набора 1-based индексов (сортируется)."""
        return cls(n=n, indices=tuple(sorted(set(int(i) for i in indices))))

    @classmethod
    def from_zero_based(cls, n: int, indices: Iterable[int]) -> "CoordinateSet":
        return cls.of(n, (int(i) + 1 for i in indices))

    @classmethod
    def full(cls, n: int) -> "CoordinateSet":
        return cls(n=n, indices=tuple(range(1, n + 1)))

    def zero_based(self) -> np.ndarray:
        return np.asarray(self.indices, dtype=np.int64) - 1

    def complement(self) -> "CoordinateSet":
        present = set(self.indices)
        return CoordinateSet(n=self.n, indices=tuple(i for i in range(1, self.n + 1) if i not in present))

    def __len__(self) -> int:
        return len(self.indices)

"""
SearchLimits — лимиты переборных алгоритмов

Все oracle и минимизации по подмножествам экспоненциальны, поэтому каждая
операция принимает optional `limits: SearchLimits | None` и при превышении
поднимает SearchLimitExceeded с именем лимита в сообщении.

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. Лимиты проверяются ДО начала перебора (нет частичных результатов)
2. Значения по умолчанию соответствуют desk-scale (секунды на типовой машине)
3. Конфигурация immutable (frozen dataclass)
"""

from dataclasses import dataclass
from math import comb

from src.core.errors import SearchLimitExceeded


@dataclass(frozen=True)
class SearchLimits:
    """Лимиты переборов.

    max_index_subsets по умолчанию равен C(40, 6): «m ≤ 6 индексов из ≤ 40 кандидатов».
    """

    max_oracle_length: int = 24
    max_subspace_space: int = 2**20
    max_index_subsets: int = comb(40, 6)
    max_z_combinations: int = 10**6
    max_access_length: int = 16
    max_rank_oracle_length: int = 512
    max_codeword_enumeration: int = 2**16


DEFAULT_LIMITS = SearchLimits()


def resolve_limits(limits: SearchLimits | None) -> SearchLimits:
    """Вернуть переданные лимиты или значения по умолчанию."""
    return limits or DEFAULT_LIMITS


def ensure_within(name: str, value: int, cap: int, hint: str = "") -> None:
    """
    Проверка значения против лимита.

    Args:
        name: Имя лимита (поле SearchLimits)
        value: Требуемый объём перебора
        cap: Текущее значение лимита
        hint: Дополнительная подсказка для сообщения

    Raises:
        SearchLimitExceeded: Если value > cap
    """
    if value > cap:
        suffix = f" ({hint})" if hint else ""
        raise SearchLimitExceeded(
            f"{name}={cap} exceeded: requested {value}{suffix}; "
            f"raise it via SearchLimits({name}=...)"
        )

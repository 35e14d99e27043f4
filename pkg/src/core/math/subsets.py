"""
Subset Search — минимизация по m-подмножествам индексов

Все границы RGHW сводятся к min по m-подмножествам кандидатов. Множества
кодируются bitmask (int), объединение — OR, мощность — int.bit_count().

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. Перебор в лексикографическом порядке, обновление только при строгом улучшении:
   argmin детерминирован (первый минимизатор)
2. Branch-and-bound: ветка отсекается, когда текущее объединение уже не меньше
   лучшего значения (объединение только растёт)
3. Объём перебора C(len, m) проверяется против лимита ДО старта
"""

import logging
from collections.abc import Callable, Iterable, Sequence
from itertools import combinations
from math import comb

from src.core.errors import InvalidParameterError
from src.core.limits import ensure_within

logger = logging.getLogger(__name__)


def to_mask(indices: Iterable[int], offset: int = 0) -> int:
    """Bitmask множества целых (сдвиг offset для отрицательных элементов)."""
    mask = 0
    for value in indices:
        mask |= 1 << (value - offset)
    return mask


def from_mask(mask: int, offset: int = 0) -> list[int]:
    """Обратное преобразование bitmask → отсортированный список."""
    values: list[int] = []
    position = 0
    while mask:
        if mask & 1:
            values.append(position + offset)
        mask >>= 1
        position += 1
    return values


def _check_arity(size: int, m: int) -> None:
    if m < 1 or m > size:
        raise InvalidParameterError(f"cannot choose {m} of {size} candidates")


def min_union_cover(
    masks: Sequence[int], m: int, cap: int, cap_name: str = "max_index_subsets"
) -> tuple[int, tuple[int, ...]]:
    """
    min по m-подмножествам S индексов |∪_{i∈S} masks[i]|.

    Args:
        masks: Bitmask множеств
        m: Размер подмножества
        cap: Лимит на C(len(masks), m)
        cap_name: Имя лимита для сообщения

    Returns:
        (минимум, argmin как возрастающий кортеж позиций)
    """
    size = len(masks)
    _check_arity(size, m)
    ensure_within(cap_name, comb(size, m), cap, f"C({size},{m})")

    total = 0
    for mask in masks:
        total |= mask
    best_value = total.bit_count() + 1
    best_choice: tuple[int, ...] = tuple(range(m))
    visited = 0

    def descend(start: int, union: int, chosen: tuple[int, ...]) -> None:
        nonlocal best_value, best_choice, visited
        visited += 1
        if union.bit_count() >= best_value:
            return
        if len(chosen) == m:
            best_value, best_choice = union.bit_count(), chosen
            return
        remaining = m - len(chosen)
        for index in range(start, size - remaining + 1):
            descend(index + 1, union | masks[index], chosen + (index,))

    descend(0, 0, ())
    logger.debug("min_union_cover: %d candidates, m=%d, %d nodes", size, m, visited)
    return best_value, best_choice


def min_over_subsets(
    size: int,
    m: int,
    objective: Callable[[tuple[int, ...]], int],
    cap: int,
    cap_name: str = "max_index_subsets",
) -> tuple[int, tuple[int, ...]]:
    """
    Полный перебор m-подмножеств range(size) с произвольной целевой функцией.

    Returns:
        (минимум, первый лексикографический argmin)
    """
    _check_arity(size, m)
    ensure_within(cap_name, comb(size, m), cap, f"C({size},{m})")
    best: tuple[int, tuple[int, ...]] | None = None
    for choice in combinations(range(size), m):
        value = objective(choice)
        if best is None or value < best[0]:
            best = (value, choice)
    assert best is not None
    return best

"""
GF Linear Algebra — исключение Гаусса над конечным полем

Тонкий слой над galois.FieldArray: каноническая RREF (без нулевых строк) с
pivot-столбцами, ранг, правое ядро, аффинное решение A·x = b и pivot completion.

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. rref() возвращает только ненулевые строки; pivots строго возрастают
2. kernel(A) — базис {x : A xᵀ = 0} в строках, размерность n − rank(A)
3. Пустые матрицы (0 строк или 0 столбцов) обрабатываются без обращения к galois
"""

from typing import Any

import numpy as np


# =============================================================================
# ECHELON FORMS
# =============================================================================


def rref(matrix: Any) -> tuple[Any, tuple[int, ...]]:
    """
    Reduced row-echelon form без нулевых строк.

    Args:
        matrix: FieldArray формы (r, n)

    Returns:
        (R, pivots): R формы (rank, n), pivots — индексы ведущих столбцов
    """
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return matrix[:0], ()
    reduced = matrix.row_reduce()
    nonzero_rows = np.any(reduced.view(np.ndarray) != 0, axis=1)
    reduced = reduced[nonzero_rows]
    pivots = tuple(int(c) for c in np.argmax(reduced.view(np.ndarray) != 0, axis=1))
    return reduced, pivots


def rank(matrix: Any) -> int:
    """Ранг матрицы над полем."""
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def kernel(matrix: Any) -> Any:
    """
    Правое ядро: строки x с matrix · xᵀ = 0.

    Свободные столбцы RREF дают базис: x[free] = e_f, x[pivots] = −R[:, f].
    """
    gf = type(matrix)
    n = matrix.shape[1]
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = gf.Zeros((len(free), n))
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            basis[:, list(pivots)] = -reduced[:, free].T
    return basis


def solve_affine(matrix: Any, rhs: Any) -> tuple[Any, Any] | None:
    """
    Все решения A·x = b.

    Args:
        matrix: FieldArray формы (r, c)
        rhs: FieldArray формы (r,)

    Returns:
        (particular, kernel_rows) или None, если система несовместна
    """
    gf = type(matrix)
    columns = matrix.shape[1]
    augmented = gf(np.hstack([matrix.view(np.ndarray), rhs.view(np.ndarray).reshape(-1, 1)]))
    reduced, pivots = rref(augmented)
    if columns in pivots:
        return None
    particular = gf.Zeros(columns)
    if pivots:
        particular[list(pivots)] = reduced[:, columns]
    return particular, kernel(matrix)


def inverse(matrix: Any) -> Any:
    """Обратная матрица (квадратная, полного ранга)."""
    return np.linalg.inv(matrix)


# =============================================================================
# ROW SPACES
# =============================================================================


def stack(gf: Any, blocks: list[Any], n: int) -> Any:
    """Вертикальная склейка блоков одной ширины (допускаются пустые)."""
    parts = [b.view(np.ndarray).reshape(-1, n) for b in blocks]
    if not parts:
        return gf.Zeros((0, n))
    return gf(np.vstack(parts))


def row_spaces_equal(first: Any, second: Any) -> bool:
    """Равенство row spaces через сравнение канонических RREF."""
    first_reduced, _ = rref(first)
    second_reduced, _ = rref(second)
    return first_reduced.shape == second_reduced.shape and np.array_equal(
        first_reduced.view(np.ndarray), second_reduced.view(np.ndarray)
    )


def in_row_space(basis: Any, vectors: Any) -> bool:
    """Лежат ли все строки vectors в row space basis."""
    gf = type(basis)
    n = basis.shape[1]
    return rank(stack(gf, [basis, vectors], n)) == rank(basis)


def pivot_completion(base: Any, candidates: Any) -> list[int]:
    """
    Индексы строк candidates, дополняющих row space base.

    Жадно: строка берётся, если увеличивает ранг текущей системы.
    Результат детерминирован порядком строк candidates.
    """
    gf = type(candidates)
    n = candidates.shape[1]
    current = stack(gf, [base], n)
    current_rank = rank(current)
    chosen: list[int] = []
    for index in range(candidates.shape[0]):
        trial = stack(gf, [current, candidates[index]], n)
        trial_rank = rank(trial)
        if trial_rank > current_rank:
            chosen.append(index)
            current, current_rank = trial, trial_rank
    return chosen

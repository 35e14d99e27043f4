"""
Code files — текстовый формат генераторных матриц

Формат: строка-заголовок "q n k", затем k строк по n целых (кодировки элементов).
"""

from pathlib import Path

import numpy as np

from src.codes.linear_code import LinearCode, zero_code
from src.core.errors import InvalidParameterError
from src.core.field import FiniteField, field_of_order


def _integers(tokens: list[str], what: str) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError as exc:
        raise InvalidParameterError(f"{what} must be integers, got {' '.join(tokens)!r}") from exc


def parse_matrix(text: str) -> tuple[FiniteField, int, np.ndarray]:
    """
    Строки файла в исходном порядке: (поле, n, матрица k × n кодировок).

    Raises:
        InvalidParameterError: Неверный заголовок, размеры или значения
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 3:
        raise InvalidParameterError("code file must start with a 'q n k' header")
    q, n, k = _integers(lines[0], "header")
    if n < 1 or not 0 <= k <= n:
        raise InvalidParameterError(f"header needs n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    field = field_of_order(q)
    rows = lines[1:]
    if len(rows) != k:
        raise InvalidParameterError(f"header declares k={k} rows, file has {len(rows)}")
    if k == 0:
        return field, n, np.zeros((0, n), dtype=np.int64)
    lengths = sorted({len(row) for row in rows})
    if lengths != [n]:
        raise InvalidParameterError(f"header declares n={n}, rows have lengths {lengths}")
    matrix = np.asarray([_integers(row, "entries") for row in rows], dtype=np.int64)
    if np.any(matrix < 0) or np.any(matrix >= q):
        raise InvalidParameterError(f"entries must be encodings in [0, {q})")
    return field, n, matrix


def parse_code(text: str) -> LinearCode:
    """
    Разбор кода из текста. k = 0 задаёт нулевой код {0}.

    Raises:
        InvalidParameterError: Неверный заголовок, размеры, значения или зависимые строки
    """
    field, n, matrix = parse_matrix(text)
    k = matrix.shape[0]
    if k == 0:
        return zero_code(field, n)
    code = LinearCode.from_rows(field, matrix, n)
    if code.k != k:
        raise InvalidParameterError(f"rows are linearly dependent: rank {code.k} < k={k}")
    return code


def read_code_file(path: str | Path) -> LinearCode:
    return parse_code(Path(path).read_text(encoding="utf-8"))


def format_code(code: LinearCode) -> str:
    """Канонический текст кода (RREF-строки)."""
    lines = [f"{code.field.order} {code.n} {code.k}"]
    for row in code.generator.view(np.ndarray):
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def write_code_file(code: LinearCode, path: str | Path) -> None:
    Path(path).write_text(format_code(code), encoding="utf-8")

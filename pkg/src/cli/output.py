"""
Output — сериализация строк отчёта в CSV и JSON

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. Колонки CSV = поля ReportRow в порядке объявления
2. None → пустая ячейка, bool → true/false
3. JSON валидируется против report_row.json перед выдачей
4. parse → emit даёт байт-в-байт тот же текст
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Final

from src.core.contracts import validate_report_row
from src.core.domain import ReportRow

COLUMNS: Final = tuple(ReportRow.model_fields)
_INTEGER_COLUMNS: Final = frozenset({"q", "mu1", "mu2", "m", "value", "expected"})


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _parse_cell(column: str, text: str) -> Any:
    if text == "":
        return None
    if column in _INTEGER_COLUMNS:
        return int(text)
    if column == "match":
        return text == "true"
    return text


def row_dict(row: ReportRow) -> dict[str, Any]:
    return row.model_dump(mode="json")


def rows_to_csv(rows: list[ReportRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({column: _cell(value) for column, value in row_dict(row).items()})
    return buffer.getvalue()


def rows_to_json(rows: list[ReportRow]) -> str:
    """
    Raises:
        ValidationError: Строка не соответствует report_row.json
    """
    data = [row_dict(row) for row in rows]
    for item in data:
        validate_report_row(item)
    return json.dumps(data, indent=2) + "\n"


def parse_csv(text: str) -> list[ReportRow]:
    reader = csv.DictReader(io.StringIO(text))
    return [
        ReportRow(**{column: _parse_cell(column, record[column]) for column in COLUMNS})
        for record in reader
    ]


def parse_json(text: str) -> list[ReportRow]:
    return [ReportRow(**item) for item in json.loads(text)]


def emit(text: str, out: str | Path | None) -> None:
    """Текст в файл out или в stdout."""
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def write_rows(rows: list[ReportRow], fmt: str = "csv", out: str | Path | None = None) -> None:
    emit(rows_to_json(rows) if fmt == "json" else rows_to_csv(rows), out)


def write_document(document: dict[str, Any], out: str | Path | None = None) -> None:
    """Произвольный JSON-документ (профиль, файл долей); валидация — на стороне вызывающего."""
    emit(json.dumps(document, indent=2) + "\n", out)

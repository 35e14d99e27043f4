"""
JSON Schema Contract Validators

Валидация JSON-документов, которые библиотека пишет наружу или читает из
репозитория, против схем в contracts/schema/ (Draft 2020-12).

Схемы:
- bound_report.json      — одна граница RGHW (BoundReport)
- leakage_profile.json   — профиль (t_m, r_m) ramp-схемы
- report_row.json        — строка отчёта CLI
- share_file.json        — файл долей для `ramp share` / `ramp reconstruct`
- owb_table.json         — debug-экспорт Λ_i / V_l
- reference_fixture.json — эталонные значения в contracts/fixtures/
"""

import json
from collections.abc import Iterator
from pathlib import Path
from typing import Any, Dict

import jsonschema
from jsonschema import Draft202012Validator, ValidationError

from src.core.errors import InvalidParameterError

_CONTRACTS_DIR = Path(__file__).parent.parent.parent.parent / "contracts"


# =============================================================================
# SCHEMA LOADER
# =============================================================================


class SchemaLoader:
    """
    Загрузчик JSON Schema файлов.

    Схемы ищутся в contracts/schema/ относительно корня проекта.
    """

    def __init__(self, schema_dir: Path | None = None):
        self._schema_dir = schema_dir or _CONTRACTS_DIR / "schema"
        if not self._schema_dir.exists():
            raise RuntimeError(f"Schema directory not found: {self._schema_dir}")
        self._schemas: Dict[str, Dict[str, Any]] = {}

    def load_schema(self, schema_name: str) -> Dict[str, Any]:
        """
        Загрузка и meta-валидация схемы.

        Args:
            schema_name: Имя схемы без расширения (например, 'bound_report')

        Raises:
            FileNotFoundError: Файл схемы не найден
            ValueError: Файл не является корректной JSON Schema
        """
        if schema_name in self._schemas:
            return self._schemas[schema_name]

        schema_path = self._schema_dir / f"{schema_name}.json"
        if not schema_path.exists():
            raise FileNotFoundError(f"Schema not found: {schema_path}")

        with open(schema_path, "r", encoding="utf-8") as f:
            schema = json.load(f)

        try:
            Draft202012Validator.check_schema(schema)
        except jsonschema.SchemaError as e:
            raise ValueError(f"Invalid JSON Schema in {schema_name}.json: {e}")

        self._schemas[schema_name] = schema
        return schema


_SCHEMA_LOADER = SchemaLoader()


# =============================================================================
# CONTRACT VALIDATORS
# =============================================================================


class ContractValidator:
    """Валидатор одного контракта поверх Draft202012Validator."""

    schema_name: str = ""

    def __init__(self, schema_name: str | None = None):
        self.schema_name = schema_name or self.schema_name
        self.schema = _SCHEMA_LOADER.load_schema(self.schema_name)
        self.validator = Draft202012Validator(self.schema)

    def validate(self, data: Dict[str, Any]) -> None:
        """
        Raises:
            ValidationError: Данные не соответствуют схеме
        """
        self.validator.validate(data)

    def is_valid(self, data: Dict[str, Any]) -> bool:
        return self.validator.is_valid(data)

    def iter_errors(self, data: Dict[str, Any]) -> Iterator[ValidationError]:
        return self.validator.iter_errors(data)


class BoundReportValidator(ContractValidator):
    schema_name = "bound_report"


class LeakageProfileValidator(ContractValidator):
    schema_name = "leakage_profile"


class ReportRowValidator(ContractValidator):
    schema_name = "report_row"


class ShareFileValidator(ContractValidator):
    schema_name = "share_file"


class OwbTableValidator(ContractValidator):
    schema_name = "owb_table"


class ReferenceFixtureValidator(ContractValidator):
    """
    Валидатор эталонных fixtures.

    Помимо схемы проверяет уникальность scenario внутри файла.
    """

    schema_name = "reference_fixture"

    def validate(self, data: Dict[str, Any]) -> None:
        super().validate(data)
        seen: set[str] = set()
        for entry in data["entries"]:
            if entry["scenario"] in seen:
                raise ValidationError(f"duplicate scenario {entry['scenario']!r}")
            seen.add(entry["scenario"])


# =============================================================================
# CONVENIENCE FUNCTIONS
# =============================================================================


_VALIDATORS: Dict[str, ContractValidator] = {}


def _validator(cls: type[ContractValidator]) -> ContractValidator:
    if cls.schema_name not in _VALIDATORS:
        _VALIDATORS[cls.schema_name] = cls()
    return _VALIDATORS[cls.schema_name]


def validate_bound_report(data: Dict[str, Any]) -> None:
    _validator(BoundReportValidator).validate(data)


def validate_leakage_profile(data: Dict[str, Any]) -> None:
    _validator(LeakageProfileValidator).validate(data)


def validate_report_row(data: Dict[str, Any]) -> None:
    _validator(ReportRowValidator).validate(data)


def validate_share_file(data: Dict[str, Any]) -> None:
    _validator(ShareFileValidator).validate(data)


def validate_owb_table(data: Dict[str, Any]) -> None:
    _validator(OwbTableValidator).validate(data)


def validate_reference_fixture(data: Dict[str, Any]) -> None:
    _validator(ReferenceFixtureValidator).validate(data)


# =============================================================================
# FIXTURES
# =============================================================================


FIXTURE_DIR = _CONTRACTS_DIR / "fixtures"


def load_fixture(target: str) -> Dict[str, Any]:
    """
    Загрузка contracts/fixtures/{target}.json с валидацией.

    Raises:
        InvalidParameterError: Неизвестный target (нет файла)
        ValidationError: Файл не соответствует reference_fixture.json
    """
    path = FIXTURE_DIR / f"{target}.json"
    if not path.exists():
        raise InvalidParameterError(f"no reference fixture for target {target!r}")
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    validate_reference_fixture(data)
    if data["target"] != target:
        raise ValidationError(f"fixture {path.name} declares target {data['target']!r}")
    return data


def fixture_targets() -> list[str]:
    """Имена всех fixtures (отсортированы)."""
    return sorted(path.stem for path in FIXTURE_DIR.glob("*.json"))

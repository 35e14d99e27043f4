"""
Contract Validation Module

Валидация JSON-контрактов RGHW-Ramp и загрузка эталонных fixtures.
"""

from .validators import (
    FIXTURE_DIR,
    BoundReportValidator,
    ContractValidator,
    LeakageProfileValidator,
    OwbTableValidator,
    ReferenceFixtureValidator,
    ReportRowValidator,
    SchemaLoader,
    ShareFileValidator,
    fixture_targets,
    load_fixture,
    validate_bound_report,
    validate_leakage_profile,
    validate_owb_table,
    validate_reference_fixture,
    validate_report_row,
    validate_share_file,
)

__all__ = [
    # Classes
    "SchemaLoader",
    "ContractValidator",
    "BoundReportValidator",
    "LeakageProfileValidator",
    "ReportRowValidator",
    "ShareFileValidator",
    "OwbTableValidator",
    "ReferenceFixtureValidator",
    # Functions
    "validate_bound_report",
    "validate_leakage_profile",
    "validate_report_row",
    "validate_share_file",
    "validate_owb_table",
    "validate_reference_fixture",
    # Fixtures
    "FIXTURE_DIR",
    "load_fixture",
    "fixture_targets",
]

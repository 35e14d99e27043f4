"""
Domain models для RGHW-Ramp

Immutable Pydantic модели: координатные множества и отчёты (границы, GHW,
профили утечки, строки CLI-отчёта).
"""

from src.core.domain.coordinates import CoordinateSet
from src.core.domain.reports import (
    BoundReport,
    BoundTier,
    GhwReport,
    LeakageProfile,
    Provenance,
    ReportRow,
    ValueKind,
)

__all__ = [
    # Coordinates
    "CoordinateSet",
    # Enums
    "BoundTier",
    "Provenance",
    "ValueKind",
    # Reports
    "BoundReport",
    "GhwReport",
    "LeakageProfile",
    "ReportRow",
]

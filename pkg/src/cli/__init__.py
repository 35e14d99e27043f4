"""
CLI module для RGHW-Ramp

Точка входа `rghw` (src.cli.main:main): воспроизведение эталонных
сценариев, границы, oracle, Hermitian семейства и ramp-схемы.
"""

from src.cli.main import build_parser, main
from src.cli.output import parse_csv, parse_json, rows_to_csv, rows_to_json
from src.cli.reproduce import TARGETS, mismatched, reproduce

__all__ = [
    # Entry point
    "main",
    "build_parser",
    # Reproduce
    "TARGETS",
    "reproduce",
    "mismatched",
    # Output
    "rows_to_csv",
    "rows_to_json",
    "parse_csv",
    "parse_json",
]

"""
Test suite for RGHW-Ramp

Contains:
- tests/unit/          : Unit tests for individual modules
"""

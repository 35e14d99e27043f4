"""
Unit tests for RGHW-Ramp modules

Each test module corresponds to a source module and tests its invariants,
edge cases and agreement with the reference fixtures.
"""

"""
RGHW-Ramp — relative generalized Hamming weights of one-point AG codes
and leakage profiles of the linear ramp secret sharing schemes built on them.

Core package root.
"""

__version__ = "0.1.0"

# src/pimsim/oracle/__init__.py

"""
Double-precision reference simulation and comparison.
"""

from .compare import Comparison, as_amplitudes, compare
from .simulator import FloatState, circuit_unitary, simulate, simulate_program

__all__ = ["Comparison", "FloatState", "as_amplitudes", "circuit_unitary", "compare", "simulate", "simulate_program"]

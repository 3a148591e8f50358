# src/pimsim/circuit/__init__.py

"""
Circuit IR, gate catalog and benchmark generators.
"""

from pimsim.data import CircuitIR, CircuitMetadata, GateKind, GateName, GateOp, Violation

from .benchmarks import BenchmarkFamily, expected_counts, gen_benchmark
from .gates import gate_entry_forms, gate_int_form, gate_unitary, has_int_form, is_diagonal, kind_problem
from .validate import require_valid, validate

__all__ = [
    "BenchmarkFamily",
    "CircuitIR",
    "CircuitMetadata",
    "GateKind",
    "GateName",
    "GateOp",
    "Violation",
    "expected_counts",
    "gate_entry_forms",
    "gate_int_form",
    "gate_unitary",
    "gen_benchmark",
    "has_int_form",
    "is_diagonal",
    "kind_problem",
    "require_valid",
    "validate",
]

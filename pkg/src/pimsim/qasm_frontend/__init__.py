# src/pimsim/qasm_frontend/__init__.py

"""
OpenQASM 2.0 subset: parse text into a CircuitIR and emit it back.
"""

from .diagnostics import ParseDiagnostic, SourceSpan
from .emitter import emit, emit_op
from .parser import QASM_GATES, angle_value, parse, parse_with_diagnostics

__all__ = [
    "QASM_GATES",
    "ParseDiagnostic",
    "SourceSpan",
    "angle_value",
    "emit",
    "emit_op",
    "parse",
    "parse_with_diagnostics",
]

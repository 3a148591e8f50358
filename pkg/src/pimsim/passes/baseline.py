# src/pimsim/passes/baseline.py

from __future__ import annotations

from pimsim.circuit import require_valid
from pimsim.data import CircuitIR, FloatEmuApply, LoweredProgram

from .stats import with_variant_counts


def baseline_program(circuit: CircuitIR) -> LoweredProgram:
    """Every op as a float-emulated matrix-vector step: the unoptimised scenario."""
    require_valid(circuit)
    steps = tuple(FloatEmuApply(op.kind, op.qubits) for op in circuit.ops)
    return with_variant_counts(LoweredProgram(circuit.n_qubits, steps))

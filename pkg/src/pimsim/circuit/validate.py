# src/pimsim/circuit/validate.py

from __future__ import annotations

from pimsim.data import CircuitIR, Violation
from pimsim.errors import CircuitValidationError

from .gates import kind_problem


def validate(circuit: CircuitIR) -> list[Violation]:
    """Check every GateOp; one violation per bad op (first problem found), empty when ok."""
    violations: list[Violation] = []
    if circuit.n_qubits < 1:
        violations.append(Violation(-1, "circuit needs at least one qubit"))
    for index, op in enumerate(circuit.ops):
        reason = _op_problem(op.kind.arity, op.qubits, circuit.n_qubits) or kind_problem(op.kind)
        if reason:
            violations.append(Violation(index, reason))
    return violations


def _op_problem(arity: int, qubits: tuple[int, ...], n_qubits: int) -> str | None:
    if len(qubits) != arity:
        return f"expected {arity} operand(s), got {len(qubits)}"
    if any(q < 0 or q >= n_qubits for q in qubits):
        return "qubit index out of range"
    if len(set(qubits)) != len(qubits):
        return "duplicate operand"
    return None


def require_valid(circuit: CircuitIR) -> None:
    """Raise CircuitValidationError listing every violation."""
    violations = validate(circuit)
    if violations:
        raise CircuitValidationError("; ".join(str(v) for v in violations))

"""
Tests for circuit validation.
"""

from fractions import Fraction

import pytest

from pimsim.circuit import require_valid, validate
from pimsim.data import CircuitIR, GateOp, Violation
from pimsim.errors import CircuitValidationError


def test_valid_circuit_has_no_violations() -> None:
    circuit = CircuitIR(3, (GateOp.of("H", 0), GateOp.of("CCX", 0, 1, 2), GateOp.of("RY", 2, angle=Fraction(3, 2))))
    assert validate(circuit) == []
    require_valid(circuit)


def test_violations_carry_index_and_reason() -> None:
    circuit = CircuitIR(
        2,
        (
            GateOp.of("H", 0),
            GateOp.of("CNOT", 0),
            GateOp.of("X", 2),
            GateOp.of("SWAP", 1, 1),
            GateOp.of("RX", 0, angle=Fraction(1, 3)),
        ),
    )
    assert validate(circuit) == [
        Violation(1, "expected 2 operand(s), got 1"),
        Violation(2, "qubit index out of range"),
        Violation(3, "duplicate operand"),
        Violation(4, "angle outside supported domain"),
    ]
    with pytest.raises(CircuitValidationError, match="duplicate operand at op 3"):
        require_valid(circuit)


def test_empty_register() -> None:
    assert validate(CircuitIR(0)) == [Violation(-1, "circuit needs at least one qubit")]

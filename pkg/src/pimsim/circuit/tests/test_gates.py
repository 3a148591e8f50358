"""
Tests for the gate catalog: unitaries, exact integer forms and kind checks.
"""

from fractions import Fraction

import numpy as np
import pytest

from pimsim.circuit import gate_entry_forms, gate_int_form, gate_unitary, has_int_form, is_diagonal, kind_problem
from pimsim.data import ANGLE_DOMAIN, GateKind, GateName, GaussInt
from pimsim.errors import CircuitValidationError, NonGaussianGateError

CATALOG = [GateKind.of(name) for name in GateName if not name.is_rotation] + [
    GateKind.of(name, angle) for name in GateName if name.is_rotation for angle in sorted(ANGLE_DOMAIN)
]


@pytest.mark.parametrize("kind", CATALOG, ids=str)
def test_catalog_unitaries_are_unitary(kind: GateKind) -> None:
    u = gate_unitary(kind)
    assert u.shape == (2**kind.arity, 2**kind.arity)
    assert np.allclose(u @ u.conj().T, np.eye(u.shape[0]), atol=1e-12)


@pytest.mark.parametrize("kind", [k for k in CATALOG if k.name not in (GateName.T, GateName.Tdg)], ids=str)
def test_int_forms_are_exactly_unitary(kind: GateKind) -> None:
    """Every Gaussian-form gate satisfies M M^dagger = 2^d I and matches the float unitary."""
    form = gate_int_form(kind)
    assert form.is_unitary()
    assert form.half_shift <= 1
    assert np.allclose(form.to_numpy(), gate_unitary(kind), atol=1e-12)


def test_minimal_half_shifts() -> None:
    assert gate_int_form(GateKind.of("H")).half_shift == 1
    assert gate_int_form(GateKind.of("RY", Fraction(1, 2))).half_shift == 1
    assert gate_int_form(GateKind.of("RX", 1)).half_shift == 0
    assert gate_int_form(GateKind.of("CNOT")).half_shift == 0
    ry = gate_int_form(GateKind.of("RY", Fraction(1, 2)))
    assert [[e.re for e in row] for row in ry.entries] == [[1, -1], [1, 1]]


def test_operand_order_for_cnot() -> None:
    """The first operand is the local most significant bit (control)."""
    form = gate_int_form(GateKind.of("CNOT"), (3, 1))
    assert form.operand_qubits == (3, 1)
    assert form.permutation_source() == (0, 1, 3, 2)


@pytest.mark.parametrize("name", ["T", "Tdg"])
def test_t_gates_have_no_uniform_form(name: str) -> None:
    kind = GateKind.of(name)
    assert not has_int_form(kind)
    with pytest.raises(NonGaussianGateError):
        gate_int_form(kind)
    forms = gate_entry_forms(kind)
    assert forms[0][0] == (GaussInt(1, 0), 0)
    assert forms[1][1][1] == 1
    assert is_diagonal(kind)


def test_kind_problems() -> None:
    assert kind_problem(GateKind.of("RX")) == "rotation gate missing angle"
    assert kind_problem(GateKind.of("RZ", Fraction(1, 3))) == "angle outside supported domain"
    assert kind_problem(GateKind.of("H", 1)) == "angle given for non-rotation gate"
    assert kind_problem(GateKind.of("RZ", Fraction(-3, 2))) is None
    with pytest.raises(CircuitValidationError):
        gate_unitary(GateKind.of("RY", Fraction(1, 4)))

"""
Tests for the double-precision reference simulator.
"""

import numpy as np
import pytest

from pimsim.circuit import gen_benchmark
from pimsim.data import CircuitIR, GateOp
from pimsim.errors import MemoryBudgetError
from pimsim.intstate import run_program
from pimsim.oracle import circuit_unitary, compare, simulate, simulate_program
from pimsim.passes import merge_gates


def test_bell_state() -> None:
    state = simulate(CircuitIR(2, (GateOp.of("H", 0), GateOp.of("CNOT", 0, 1))))
    assert np.allclose(state.amps, [1 / np.sqrt(2), 0, 0, 1 / np.sqrt(2)])
    assert state.norm_error() < 1e-12


def test_bernstein_vazirani_reveals_the_secret() -> None:
    """Data qubits end in |111>, the ancilla in |->."""
    probs = simulate(gen_benchmark("BV", 4)).probabilities()
    assert np.flatnonzero(probs > 1e-12).tolist() == [7, 15]
    assert np.allclose(probs[[7, 15]], 0.5)


def test_qubit_zero_is_the_low_index_bit() -> None:
    state = simulate(CircuitIR(3, (GateOp.of("X", 0),)))
    assert np.flatnonzero(state.amps).tolist() == [1]


def test_simulate_agrees_with_dense_unitary() -> None:
    circuit = gen_benchmark("HS", 4)
    assert np.allclose(simulate(circuit).amps, circuit_unitary(circuit)[:, 0])


def test_program_and_circuit_agree() -> None:
    circuit = gen_benchmark("EDC", 5)
    assert np.allclose(simulate_program(merge_gates(circuit)).amps, simulate(circuit).amps)


def test_compare() -> None:
    circuit = gen_benchmark("BV", 5)
    exact, _ = run_program(merge_gates(circuit))
    result = compare(exact, simulate(circuit))
    assert result.passed
    assert result.max_deviation < 1e-12
    other = compare(exact, simulate(gen_benchmark("QRNG", 5)))
    assert not other.passed
    with pytest.raises(ValueError, match="dimension mismatch"):
        compare(exact, simulate(gen_benchmark("QRNG", 4)))


def test_budgets() -> None:
    with pytest.raises(MemoryBudgetError):
        simulate(gen_benchmark("QRNG", 20), budget_bytes=2**20)
    with pytest.raises(MemoryBudgetError):
        circuit_unitary(gen_benchmark("QRNG", 11))

# src/pimsim/oracle/simulator.py

"""
Double-precision reference simulator.

The state is held as an n-dimensional (2, ..., 2) tensor; a k-qubit gate is a
tensordot over its operand axes followed by a transpose back into place.
Index j is little-endian, so qubit q lives on tensor axis n-1-q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from pimsim.circuit import gate_unitary, require_valid
from pimsim.data import CircuitIR, LoweredProgram
from pimsim.errors import MemoryBudgetError
from pimsim.intstate import DEFAULT_HOST_BUDGET, state_footprint
from pimsim.passes import step_matrix
from pimsim.utils.logger import get_logger

logger = get_logger(__name__)

NORM_TOLERANCE = 1e-9
UNITARY_QUBIT_LIMIT = 10


@dataclass
class FloatState:
    n_qubits: int
    amps: np.ndarray

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def norm_error(self) -> float:
        return abs(float(np.sum(self.probabilities())) - 1.0)


def _apply(tensor: np.ndarray, matrix: np.ndarray, qubits: Sequence[int], n_qubits: int) -> np.ndarray:
    k = len(qubits)
    targets = [n_qubits - 1 - q for q in qubits]
    gate = np.reshape(matrix, [2] * (2 * k))
    product = np.tensordot(gate, tensor, axes=(list(range(k, 2 * k)), targets))
    unused = [axis for axis in range(n_qubits) if axis not in targets]
    return np.transpose(product, np.argsort([*targets, *unused]))


def _initial(n_qubits: int, budget_bytes: int) -> np.ndarray:
    if state_footprint(n_qubits) > budget_bytes:
        raise MemoryBudgetError(f"{n_qubits}-qubit oracle state exceeds host budget of {budget_bytes} B")
    tensor = np.zeros([2] * n_qubits, dtype=np.complex128)
    tensor[(0,) * n_qubits] = 1.0
    return tensor


def simulate(circuit: CircuitIR, budget_bytes: int = DEFAULT_HOST_BUDGET) -> FloatState:
    """
    Apply every gate's unitary in order to |0...0>.

    Raises:
        CircuitValidationError: the circuit fails validate()
        MemoryBudgetError: 2^(n+4) bytes above budget_bytes
    """
    require_valid(circuit)
    n = circuit.n_qubits
    tensor = _initial(n, budget_bytes)
    for op in circuit.ops:
        tensor = _apply(tensor, gate_unitary(op.kind), op.qubits, n)
    state = FloatState(n, tensor.reshape(2**n))
    logger.debug("oracle simulated %d ops on %d qubits (norm error %.2e)", len(circuit.ops), n, state.norm_error())
    return state


def simulate_program(program: LoweredProgram, budget_bytes: int = DEFAULT_HOST_BUDGET) -> FloatState:
    """Run a lowered program in double precision, step by step, from |0...0>."""
    n = program.n_qubits
    tensor = _initial(n, budget_bytes)
    for step in program.steps:
        tensor = _apply(tensor, step_matrix(step), step.qubits, n)
    return FloatState(n, tensor.reshape(2**n))


def circuit_unitary(circuit: CircuitIR) -> np.ndarray:
    """Dense 2^n x 2^n unitary of the whole circuit, n <= 10."""
    require_valid(circuit)
    n = circuit.n_qubits
    if n > UNITARY_QUBIT_LIMIT:
        raise MemoryBudgetError(f"dense unitary limited to {UNITARY_QUBIT_LIMIT} qubits, got {n}")
    # Columns ride along as one extra (trailing) axis
    tensor = np.eye(2**n, dtype=np.complex128).reshape([2] * n + [2**n])
    for op in circuit.ops:
        k = len(op.qubits)
        targets = [n - 1 - q for q in op.qubits]
        gate = np.reshape(gate_unitary(op.kind), [2] * (2 * k))
        product = np.tensordot(gate, tensor, axes=(list(range(k, 2 * k)), targets))
        unused = [axis for axis in range(n + 1) if axis not in targets]
        tensor = np.transpose(product, np.argsort([*targets, *unused]))
    return tensor.reshape(2**n, 2**n)

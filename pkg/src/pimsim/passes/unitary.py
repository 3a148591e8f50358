# src/pimsim/passes/unitary.py

from __future__ import annotations

import numpy as np

from pimsim.circuit import gate_unitary
from pimsim.data import IntMatrixApply, PermApply, ProgramStep
from pimsim.intstate import group_index


def step_matrix(step: ProgramStep) -> np.ndarray:
    """Local 2^k x 2^k unitary of a step over its own qubits (first qubit = local MSB)."""
    if isinstance(step, IntMatrixApply):
        return step.matrix.to_numpy()
    if isinstance(step, PermApply):
        dim = len(step.source)
        m = np.zeros((dim, dim), dtype=np.complex128)
        m[np.arange(dim), np.asarray(step.source)] = 1.0
        return m
    return gate_unitary(step.kind)


def step_unitary(step: ProgramStep, n_qubits: int) -> np.ndarray:
    """Dense 2^n x 2^n unitary of one step (qubit 0 = least significant index bit)."""
    local = step_matrix(step)
    index = group_index(n_qubits, step.qubits)
    full = np.zeros((2**n_qubits, 2**n_qubits), dtype=np.complex128)
    for g in range(index.shape[1]):
        rows = index[:, g]
        full[np.ix_(rows, rows)] = local
    return full

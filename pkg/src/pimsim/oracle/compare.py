# src/pimsim/oracle/compare.py

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pimsim.intstate import QState

from .simulator import FloatState


@dataclass(frozen=True)
class Comparison:
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


def as_amplitudes(state: FloatState | QState) -> np.ndarray:
    if isinstance(state, QState):
        return state.amplitudes()
    return state.amps


def compare(a: FloatState | QState, b: FloatState | QState, tol: float = 1e-9) -> Comparison:
    """
    Max elementwise |a_j - b_j|, no global phase freedom.

    Raises:
        ValueError: qubit counts differ
    """
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"dimension mismatch: {a.n_qubits} vs {b.n_qubits} qubits")
    deviation = float(np.max(np.abs(as_amplitudes(a) - as_amplitudes(b)), initial=0.0))
    return Comparison(deviation, tol)

# src/pimsim/circuit/gates.py

"""
Gate catalog: double-precision unitaries and exact Gaussian-integer forms.

Multi-qubit matrices use operand order (control(s)..., target) with the first
operand as the most significant bit of the local index.

Usage:
    from pimsim.circuit import gate_unitary, gate_int_form
    from pimsim.data import GateKind

    gate_unitary(GateKind.of("H"))           # (1/sqrt2) [[1, 1], [1, -1]]
    gate_int_form(GateKind.of("RY", "1/2"))  # [[1, -1], [1, 1]], d=1
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from pimsim.data import ANGLE_DOMAIN, GateKind, GateName, GaussInt, IntGateMatrix
from pimsim.errors import CircuitValidationError, NonGaussianGateError

# Largest half-shift scanned when looking for an integer form
MAX_HALF_SHIFT = 3
TOLERANCE = 1e-12

_SQRT2 = math.sqrt(2.0)


def kind_problem(kind: GateKind) -> str | None:
    """Reason the kind is not a valid catalog member, or None."""
    if kind.name.is_rotation:
        if kind.angle is None:
            return "rotation gate missing angle"
        if kind.angle not in ANGLE_DOMAIN:
            return "angle outside supported domain"
    elif kind.angle is not None:
        return "angle given for non-rotation gate"
    return None


def _permutation(source: Sequence[int]) -> np.ndarray:
    dim = len(source)
    m = np.zeros((dim, dim), dtype=np.complex128)
    for row, col in enumerate(source):
        m[row, col] = 1.0
    return m


def _rotation(name: GateName, theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    if name is GateName.RX:
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)
    if name is GateName.RY:
        return np.array([[c, -s], [s, c]], dtype=np.complex128)
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]], dtype=np.complex128)


@lru_cache(maxsize=None)
def _unitary(kind: GateKind) -> np.ndarray:
    name = kind.name
    inv = 1 / _SQRT2
    if name is GateName.H:
        return np.array([[inv, inv], [inv, -inv]], dtype=np.complex128)
    if name is GateName.X:
        return _permutation((1, 0))
    if name is GateName.Y:
        return np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    if name is GateName.Z:
        return np.diag([1, -1]).astype(np.complex128)
    if name is GateName.S:
        return np.diag([1, 1j]).astype(np.complex128)
    if name is GateName.Sdg:
        return np.diag([1, -1j]).astype(np.complex128)
    if name is GateName.T:
        return np.diag([1, np.exp(0.25j * math.pi)]).astype(np.complex128)
    if name is GateName.Tdg:
        return np.diag([1, np.exp(-0.25j * math.pi)]).astype(np.complex128)
    if name.is_rotation:
        assert kind.angle is not None
        return _rotation(name, float(kind.angle) * math.pi)
    if name is GateName.CNOT:
        return _permutation((0, 1, 3, 2))
    if name is GateName.CZ:
        return np.diag([1, 1, 1, -1]).astype(np.complex128)
    if name is GateName.SWAP:
        return _permutation((0, 2, 1, 3))
    if name is GateName.CCX:
        return _permutation((0, 1, 2, 3, 4, 5, 7, 6))
    raise CircuitValidationError(f"no unitary for {kind}")


def gate_unitary(kind: GateKind) -> np.ndarray:
    """Standard 2^arity x 2^arity unitary of a catalog gate (a fresh copy)."""
    problem = kind_problem(kind)
    if problem:
        raise CircuitValidationError(f"{kind}: {problem}")
    return _unitary(kind).copy()


def _as_gaussian(values: np.ndarray) -> list[GaussInt] | None:
    out = []
    for v in values.ravel():
        g = GaussInt.from_complex(complex(v), TOLERANCE * 16)
        if g is None:
            return None
        out.append(g)
    return out


@lru_cache(maxsize=None)
def _int_form(kind: GateKind) -> IntGateMatrix:
    u = gate_unitary(kind)
    dim = u.shape[0]
    for d in range(MAX_HALF_SHIFT + 1):
        flat = _as_gaussian(u * _SQRT2**d)
        if flat is not None:
            rows = [flat[r * dim : (r + 1) * dim] for r in range(dim)]
            return IntGateMatrix.of(rows, d, range(kind.arity))
    raise NonGaussianGateError(f"{kind} has no uniform Z[i]/(sqrt 2)^d form")


def gate_int_form(kind: GateKind, operand_qubits: Sequence[int] | None = None) -> IntGateMatrix:
    """
    Exact form of a catalog gate: Gaussian-integer entries over (sqrt 2)^d with minimal d.

    Args:
        kind: catalog gate
        operand_qubits: qubits the matrix acts on; defaults to 0..arity-1

    Raises:
        NonGaussianGateError: T and Tdg need per-entry denominators (see gate_entry_forms)
    """
    form = _int_form(kind)
    if operand_qubits is None:
        return form
    return form.with_operands(operand_qubits)


def has_int_form(kind: GateKind) -> bool:
    try:
        _int_form(kind)
    except NonGaussianGateError:
        return False
    return True


def gate_entry_forms(kind: GateKind) -> tuple[tuple[tuple[GaussInt, int], ...], ...]:
    """Per-entry minimal (numerator, half_shift) pairs; zero entries are (0, 0)."""
    u = gate_unitary(kind)
    rows = []
    for row in u:
        forms = []
        for value in row:
            for d in range(MAX_HALF_SHIFT + 1):
                g = GaussInt.from_complex(complex(value) * _SQRT2**d, TOLERANCE * 16)
                if g is not None:
                    forms.append((g, d if g else 0))
                    break
            else:
                raise NonGaussianGateError(f"{kind} entry {value} has no Z[i]/(sqrt 2)^d form")
        rows.append(tuple(forms))
    return tuple(rows)


def is_diagonal(kind: GateKind) -> bool:
    u = _unitary(kind)
    return bool(np.allclose(u, np.diag(np.diag(u)), atol=TOLERANCE))

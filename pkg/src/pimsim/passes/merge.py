# src/pimsim/passes/merge.py

"""
Gate merging.

Greedy left-to-right fusion without commutation:
    - consecutive 1Q gates on a qubit fuse into one matrix product (kept unreduced,
      so H.H becomes 2I with d=2 and executes as a shift)
    - when pending 1Q products are flushed, one with odd half-shift pairs with the
      lowest other odd pending product into a tensor product (H q0 with RY q1 gives
      kron(H, RY) over (q0, q1), d=2)
    - multi-qubit gates flush only their own qubits and are emitted at d=0
    - T-family runs whose product has no Gaussian form fall back to FloatEmuApply
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from pimsim.circuit import gate_int_form, gate_unitary, has_int_form, require_valid
from pimsim.data import (
    CircuitIR,
    FloatEmuApply,
    GateKind,
    GaussInt,
    IntGateMatrix,
    IntMatrixApply,
    LoweredProgram,
    ProgramStats,
    ProgramStep,
)
from pimsim.utils.logger import get_logger

from .stats import with_variant_counts

logger = get_logger(__name__)

_SQRT2 = math.sqrt(2.0)


@dataclass
class _Run:
    """Pending 1Q gates on one qubit, in application order."""

    qubit: int
    kinds: list[GateKind] = field(default_factory=list)
    product: IntGateMatrix | None = None
    exact: bool = True

    def push(self, kind: GateKind) -> None:
        self.kinds.append(kind)
        if self.exact and has_int_form(kind):
            form = gate_int_form(kind, (self.qubit,))
            self.product = form if self.product is None else form.matmul(self.product)
        else:
            self.exact = False
            self.product = None

    def resolve(self) -> IntGateMatrix | None:
        """Fused matrix of the run, or None when the product leaves the Gaussian ring."""
        if self.exact:
            return self.product
        u = np.eye(2, dtype=np.complex128)
        for kind in self.kinds:
            u = gate_unitary(kind) @ u
        for d in range(4):
            scaled = u * _SQRT2**d
            entries = [GaussInt.from_complex(complex(v), 1e-9) for v in scaled.ravel()]
            if all(e is not None for e in entries):
                rows = [[entries[0], entries[1]], [entries[2], entries[3]]]
                return IntGateMatrix.of(rows, d, (self.qubit,))  # type: ignore[arg-type]
        return None


class _Merger:
    def __init__(self, n_qubits: int) -> None:
        self.n_qubits = n_qubits
        self.pending: dict[int, _Run] = {}
        self.steps: list[ProgramStep] = []
        self.merged_pairs = 0
        self.fused_gates = 0
        self.odd_residual = 0

    def push_single(self, kind: GateKind, qubit: int) -> None:
        self.pending.setdefault(qubit, _Run(qubit)).push(kind)

    def _take(self, qubit: int) -> tuple[_Run, IntGateMatrix | None]:
        run = self.pending.pop(qubit)
        self.fused_gates += len(run.kinds) - 1
        return run, run.resolve()

    def _odd_partner(self, qubit: int) -> int | None:
        for other in sorted(self.pending):
            if other == qubit:
                continue
            matrix = self.pending[other].resolve()
            if matrix is not None and matrix.half_shift % 2 == 1:
                return other
        return None

    def flush(self, qubits: list[int]) -> None:
        for qubit in sorted(qubits):
            if qubit not in self.pending:
                continue
            run, matrix = self._take(qubit)
            if matrix is None:
                logger.debug("q%d: %d-gate run has no Gaussian form, float-emulating", qubit, len(run.kinds))
                self.steps.extend(FloatEmuApply(kind, (qubit,)) for kind in run.kinds)
                continue
            if matrix.half_shift % 2 == 1:
                partner = self._odd_partner(qubit)
                if partner is not None:
                    _, other = self._take(partner)
                    assert other is not None
                    low, high = (matrix, other) if qubit < partner else (other, matrix)
                    self.steps.append(IntMatrixApply(low.tensor(high)))
                    self.merged_pairs += 1
                    logger.debug("paired q%d with q%d (d=%d)", qubit, partner, low.half_shift + high.half_shift)
                    continue
                self.odd_residual += 1
            self.steps.append(IntMatrixApply(matrix))

    def push_multi(self, kind: GateKind, qubits: tuple[int, ...]) -> None:
        self.flush(list(qubits))
        self.steps.append(IntMatrixApply(gate_int_form(kind, qubits)))


def merge_gates(circuit: CircuitIR) -> LoweredProgram:
    """
    Fuse the circuit's gates into integer-matrix steps.

    Raises:
        CircuitValidationError: the circuit fails validate()
    """
    require_valid(circuit)
    merger = _Merger(circuit.n_qubits)
    for op in circuit.ops:
        if op.kind.arity == 1:
            merger.push_single(op.kind, op.qubits[0])
        else:
            merger.push_multi(op.kind, op.qubits)
    merger.flush(list(merger.pending))

    stats = ProgramStats(
        odd_residual=merger.odd_residual,
        merged_pairs=merger.merged_pairs,
        fused_gates=merger.fused_gates,
    )
    program = with_variant_counts(LoweredProgram(circuit.n_qubits, tuple(merger.steps), 0, stats))
    logger.debug(
        "merged %d ops into %d steps (%d pairs, %d fused, %d odd residual)",
        len(circuit.ops),
        len(program.steps),
        stats.merged_pairs,
        stats.fused_gates,
        stats.odd_residual,
    )
    return program

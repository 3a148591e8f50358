# src/pimsim/data/program.py

"""
Executable program and partition plan types produced by pimsim.passes.

A LoweredProgram is a flat sequence of steps, each one of:
    - IntMatrixApply: Gaussian-integer matrix with a (sqrt 2)^d denominator
    - PermApply: a 0/1 permutation executed as element swaps
    - FloatEmuApply: a catalog gate executed through (modelled) float emulation
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Literal, TypeAlias, Union

from .gaussint import IntGateMatrix
from .models import CircuitIR, GateKind, Qubits

PermLabel: TypeAlias = Literal["X", "CNOT", "SWAP", "CCX", "PERM"]


@dataclass(frozen=True)
class IntMatrixApply:
    matrix: IntGateMatrix

    @property
    def qubits(self) -> Qubits:
        return self.matrix.operand_qubits

    @property
    def variant(self) -> str:
        return "int_matrix"


@dataclass(frozen=True)
class PermApply:
    """
    Permutation step on `qubits` (qubits[0] is the local MSB).

    source[r] is the local input index whose numerator lands in local output row r.
    """

    label: PermLabel
    qubits: Qubits
    source: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.source) != list(range(2 ** len(self.qubits))):
            raise ValueError(f"{self.source} is not a permutation of {2 ** len(self.qubits)} local indices")

    @property
    def variant(self) -> str:
        return "permutation"


@dataclass(frozen=True)
class FloatEmuApply:
    kind: GateKind
    qubits: Qubits

    @property
    def variant(self) -> str:
        return "float_emu"


ProgramStep: TypeAlias = Union[IntMatrixApply, PermApply, FloatEmuApply]


@dataclass(frozen=True)
class ProgramStats:
    int_matrix: int = 0
    permutation: int = 0
    float_emu: int = 0
    odd_residual: int = 0
    merged_pairs: int = 0
    fused_gates: int = 0
    permutation_lowered: int = 0

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class LoweredProgram:
    n_qubits: int
    steps: tuple[ProgramStep, ...] = ()
    scale_k: int = 0
    stats: ProgramStats = field(default_factory=ProgramStats)

    def variant_counts(self) -> dict[str, int]:
        counts = {"int_matrix": 0, "permutation": 0, "float_emu": 0}
        for step in self.steps:
            counts[step.variant] += 1
        return counts

    def total_half_shift(self) -> int:
        return sum(s.matrix.half_shift for s in self.steps if isinstance(s, IntMatrixApply))

    def has_float_emu(self) -> bool:
        return any(isinstance(s, FloatEmuApply) for s in self.steps)


@dataclass(frozen=True)
class Component:
    """A connected qubit group: sorted global qubits and its remapped sub-circuit.

    Sub-circuit qubit i is global qubit qubits[i].
    """

    qubits: Qubits
    circuit: CircuitIR

    @property
    def n_qubits(self) -> int:
        return len(self.qubits)


@dataclass(frozen=True)
class PartitionPlan:
    n_qubits: int
    components: tuple[Component, ...]
    assignment: dict[int, int] = field(default_factory=dict, compare=False)
    num_dpus: int = 0

    @property
    def is_assigned(self) -> bool:
        return len(self.assignment) == len(self.components) and self.num_dpus > 0

    def components_on(self, dpu_id: int) -> list[int]:
        return [c for c, d in sorted(self.assignment.items()) if d == dpu_id]

    def dpus_used(self) -> list[int]:
        return sorted(set(self.assignment.values()))

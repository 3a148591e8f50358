# src/pimsim/data/models.py

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping, TypeAlias

# Qubit indices
Qubit = int
Qubits: TypeAlias = tuple[Qubit, ...]

# Rotation angles are rational multiples of pi
Angle: TypeAlias = Fraction

# Angles the integer ring can carry: +-pi/2, +-3pi/2, pi
ANGLE_DOMAIN: frozenset[Fraction] = frozenset(
    {Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2), Fraction(-3, 2), Fraction(1)}
)


class GateName(str, Enum):
    """Catalog gate identifiers."""

    H = "H"
    X = "X"
    Y = "Y"
    Z = "Z"
    S = "S"
    Sdg = "Sdg"
    T = "T"
    Tdg = "Tdg"
    RX = "RX"
    RY = "RY"
    RZ = "RZ"
    CNOT = "CNOT"
    CZ = "CZ"
    SWAP = "SWAP"
    CCX = "CCX"

    @property
    def arity(self) -> int:
        if self in (GateName.CNOT, GateName.CZ, GateName.SWAP):
            return 2
        if self is GateName.CCX:
            return 3
        return 1

    @property
    def is_rotation(self) -> bool:
        return self in (GateName.RX, GateName.RY, GateName.RZ)

    @property
    def is_permutation(self) -> bool:
        """Unitary is a 0/1 permutation matrix."""
        return self in (GateName.X, GateName.CNOT, GateName.SWAP, GateName.CCX)


@dataclass(frozen=True)
class GateKind:
    """A catalog gate, with its angle (in units of pi) for rotations.

    Construction does not validate; circuit.validate() reports bad kinds as data.
    """

    name: GateName
    angle: Angle | None = None

    @classmethod
    def of(cls, name: str | GateName, angle: Fraction | int | str | None = None) -> GateKind:
        return cls(GateName(name), None if angle is None else Fraction(angle))

    @property
    def arity(self) -> int:
        return self.name.arity

    def __str__(self) -> str:
        if self.angle is None:
            return self.name.value
        return f"{self.name.value}({self.angle}pi)"


@dataclass(frozen=True)
class GateOp:
    """One gate application; qubits are ordered (control(s) first, target last)."""

    kind: GateKind
    qubits: Qubits

    @classmethod
    def of(cls, name: str | GateName, *qubits: int, angle: Fraction | int | str | None = None) -> GateOp:
        return cls(GateKind.of(name, angle), tuple(qubits))

    def remap(self, mapping: Mapping[int, int]) -> GateOp:
        return GateOp(self.kind, tuple(mapping[q] for q in self.qubits))

    def __str__(self) -> str:
        return f"{self.kind} " + " ".join(f"q{q}" for q in self.qubits)


@dataclass(frozen=True)
class CircuitMetadata:
    """Circuit name plus the generator parameters (or parser facts) that produced it."""

    name: str = ""
    params: Mapping[str, Any] = field(default_factory=dict)
    measured: bool = False


@dataclass(frozen=True)
class CircuitIR:
    n_qubits: int
    ops: tuple[GateOp, ...] = ()
    metadata: CircuitMetadata = field(default_factory=CircuitMetadata, compare=False)

    def counts(self) -> tuple[int, int]:
        """(1-qubit gate count, multi-qubit gate count)."""
        single = sum(1 for op in self.ops if op.kind.arity == 1)
        return single, len(self.ops) - single

    def same_structure(self, other: CircuitIR) -> bool:
        return self.n_qubits == other.n_qubits and self.ops == other.ops

    def with_ops(self, ops: tuple[GateOp, ...]) -> CircuitIR:
        return CircuitIR(self.n_qubits, ops, self.metadata)


@dataclass(frozen=True)
class Violation:
    """A validation finding: the offending op index and the reason."""

    index: int
    reason: str

    def __str__(self) -> str:
        return f"{self.reason} at op {self.index}"

# src/pimsim/data/__init__.py

"""
Data models shared by every pimsim package.

Circuit IR, exact Gaussian-integer matrices, lowered programs and
partition plans. Nothing here imports from other pimsim packages.
"""

from .gaussint import ONE, ZERO, GaussInt, IntGateMatrix
from .models import (
    ANGLE_DOMAIN,
    CircuitIR,
    CircuitMetadata,
    GateKind,
    GateName,
    GateOp,
    Qubits,
    Violation,
)
from .program import (
    Component,
    FloatEmuApply,
    IntMatrixApply,
    LoweredProgram,
    PartitionPlan,
    PermApply,
    ProgramStats,
    ProgramStep,
)

__all__ = [
    "ANGLE_DOMAIN",
    "ONE",
    "ZERO",
    "CircuitIR",
    "CircuitMetadata",
    "Component",
    "FloatEmuApply",
    "GateKind",
    "GateName",
    "GateOp",
    "GaussInt",
    "IntGateMatrix",
    "IntMatrixApply",
    "LoweredProgram",
    "PartitionPlan",
    "PermApply",
    "ProgramStats",
    "ProgramStep",
    "Qubits",
    "Violation",
]

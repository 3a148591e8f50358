# src/pimsim/pim_exec/capacity.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from pimsim.data import FloatEmuApply, IntMatrixApply, LoweredProgram, PartitionPlan, PermApply, ProgramStep

from .config import DpuConfig, state_bytes

# Serialized step layout: Gaussian entries as two int32, 4-byte header fields,
# 4 bytes per operand index, float entries as two float64
GAUSS_ENTRY_BYTES = 8
FLOAT_ENTRY_BYTES = 16
FIELD_BYTES = 4


def step_payload_bytes(step: ProgramStep) -> int:
    operands = FIELD_BYTES * len(step.qubits)
    dim = 2 ** len(step.qubits)
    if isinstance(step, IntMatrixApply):
        return dim * dim * GAUSS_ENTRY_BYTES + FIELD_BYTES + operands
    if isinstance(step, PermApply):
        # label word, operands, one byte per source-table entry
        return FIELD_BYTES + operands + dim
    assert isinstance(step, FloatEmuApply)
    return dim * dim * FLOAT_ENTRY_BYTES + operands


def payload_bytes(program: LoweredProgram) -> int:
    """Bytes of the serialized program shipped to a DPU."""
    return sum(step_payload_bytes(s) for s in program.steps)


@dataclass(frozen=True)
class CapacityViolation:
    dpu_id: int
    severity: Literal["error", "warning"]
    message: str

    def __str__(self) -> str:
        return f"DPU {self.dpu_id}: {self.severity}: {self.message}"


def capacity_check(
    plan: PartitionPlan,
    cfg: DpuConfig,
    programs: Sequence[LoweredProgram] | None = None,
) -> list[CapacityViolation]:
    """
    Per-DPU MRAM check (states plus program payloads) and WRAM tiling warnings.

    Violations are data; only MRAM overflow and DPU-count problems are errors.
    """
    if not plan.is_assigned:
        raise ValueError("capacity_check needs an assigned plan (run pack first)")
    out: list[CapacityViolation] = []
    if plan.num_dpus > cfg.max_dpus:
        out.append(CapacityViolation(-1, "error", f"{plan.num_dpus} DPUs requested, system has {cfg.max_dpus}"))
    for dpu in plan.dpus_used():
        total = 0
        for c in plan.components_on(dpu):
            size = state_bytes(plan.components[c].n_qubits, cfg)
            total += size
            if programs is not None:
                total += payload_bytes(programs[c])
            if size > cfg.wram_bytes:
                out.append(
                    CapacityViolation(
                        dpu, "warning", f"component {c} state ({size} B) exceeds WRAM ({cfg.wram_bytes} B); tiled via DMA"
                    )
                )
        if total > cfg.mram_bytes:
            out.append(CapacityViolation(dpu, "error", f"{total} B exceeds MRAM ({cfg.mram_bytes} B)"))
    return out


def errors_only(violations: Sequence[CapacityViolation]) -> list[CapacityViolation]:
    return [v for v in violations if v.severity == "error"]

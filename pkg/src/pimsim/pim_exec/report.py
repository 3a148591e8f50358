# src/pimsim/pim_exec/report.py

"""
Cost report over an ExecutionTrace.

All costs are model units derived from counted bytes and operations with the
DpuConfig cost parameters. They are not wall-clock measurements.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from pimsim.utils.formatting import format_size

from .config import DpuConfig
from .trace import PHASES, ExecutionTrace

MODEL_UNITS = "model units"


class PhaseCost(BaseModel):
    phase: str = Field(..., description="One of 'C-to-D Tran.', 'Comp.', 'D-to-C Tran.', 'Recon.'.")
    units: float = Field(..., ge=0, description="Modeled cost in model units.")
    fraction: float = Field(..., ge=0, le=1, description="Share of the total modeled cost.")


class DpuCost(BaseModel):
    dpu_id: int
    components: list[int]
    footprint_bytes: int = Field(..., description="Sum of 2^(n_c+4) over the DPU's components.")
    footprint: str = Field(..., description="footprint_bytes, human readable.")
    c2d_bytes: int
    d2c_bytes: int
    dma_bytes: int
    int_ops: int
    float_ops: int
    comp_units: float
    utilisation: float = Field(..., ge=0, le=1, description="Comp. units relative to the busiest DPU.")


class CostReport(BaseModel):
    units: Literal["model units"] = MODEL_UNITS
    phases: list[PhaseCost]
    total_units: float
    dominant_phase: str
    dpus: list[DpuCost]
    dpus_used: int
    dpus_available: int
    inter_dpu_messages: int
    total_footprint_bytes: int
    total_footprint: str
    transfer_bytes: int

    def fraction(self, phase: str) -> float:
        return next(p.fraction for p in self.phases if p.phase == phase)


def cost_report(trace: ExecutionTrace, cfg: DpuConfig | None = None) -> CostReport:
    cfg = cfg or DpuConfig()
    units = trace.modeled_units(cfg)
    total = sum(units.values())
    phases = [PhaseCost(phase=p, units=units[p], fraction=(units[p] / total if total else 0.0)) for p in PHASES]
    dominant = max(PHASES, key=lambda p: units[p]) if total else PHASES[0]

    busiest = max((d.comp_units(cfg) for d in trace.dpus), default=0.0)
    dpus = [
        DpuCost(
            dpu_id=d.dpu_id,
            components=list(d.components),
            footprint_bytes=d.footprint_bytes,
            footprint=format_size(d.footprint_bytes),
            c2d_bytes=d.c2d_bytes,
            d2c_bytes=d.d2c_bytes,
            dma_bytes=d.dma_bytes,
            int_ops=d.ledger.native_ops,
            float_ops=d.ledger.emulated_float_ops,
            comp_units=d.comp_units(cfg),
            utilisation=(d.comp_units(cfg) / busiest if busiest else 0.0),
        )
        for d in trace.dpus
    ]
    footprint = sum(d.footprint_bytes for d in trace.dpus)
    return CostReport(
        phases=phases,
        total_units=total,
        dominant_phase=dominant,
        dpus=dpus,
        dpus_used=len(trace.dpus),
        dpus_available=trace.num_dpus,
        inter_dpu_messages=trace.inter_dpu_messages,
        total_footprint_bytes=footprint,
        total_footprint=format_size(footprint),
        transfer_bytes=trace.transfer_bytes,
    )

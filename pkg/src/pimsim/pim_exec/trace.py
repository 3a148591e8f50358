# src/pimsim/pim_exec/trace.py

"""
Four-phase execution trace.

    C-to-D Tran.   host -> DPU bytes (initial states + serialized programs)
    Comp.          kernel ledger on the DPU (plus MRAM<->WRAM DMA bytes when tiled)
    D-to-C Tran.   DPU -> host bytes (result states)
    Recon.         host tensor-product reconstruction

Quantities are counts; modeled_units converts them with the DpuConfig cost
parameters into model units, never wall-clock time.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import IO

from pimsim.intstate import KernelLedger

from .config import DpuConfig

C2D = "C-to-D Tran."
COMP = "Comp."
D2C = "D-to-C Tran."
RECON = "Recon."
PHASES: tuple[str, ...] = (C2D, COMP, D2C, RECON)

CSV_COLUMNS: tuple[str, ...] = ("dpu_id", "phase", "bytes", "int_ops", "float_ops", "modeled_units")
HOST = "host"


@dataclass
class DpuTrace:
    dpu_id: int
    components: list[int] = field(default_factory=list)
    footprint_bytes: int = 0
    c2d_bytes: int = 0
    d2c_bytes: int = 0
    dma_bytes: int = 0
    ledger: KernelLedger = field(default_factory=KernelLedger)

    def comp_units(self, cfg: DpuConfig) -> float:
        return (
            self.ledger.native_ops * cfg.int_op_cost
            + self.ledger.emulated_float_ops * cfg.float_emu_cost
            + self.dma_bytes / cfg.dma_bytes_per_unit
        )

    def phase_units(self, cfg: DpuConfig) -> dict[str, float]:
        return {
            C2D: self.c2d_bytes / cfg.c2d_bytes_per_unit,
            COMP: self.comp_units(cfg),
            D2C: self.d2c_bytes / cfg.d2c_bytes_per_unit,
        }


@dataclass
class ExecutionTrace:
    dpus: list[DpuTrace] = field(default_factory=list)
    recon_ops: int = 0
    num_dpus: int = 0
    inter_dpu_messages: int = 0

    @property
    def c2d_bytes(self) -> int:
        return sum(d.c2d_bytes for d in self.dpus)

    @property
    def d2c_bytes(self) -> int:
        return sum(d.d2c_bytes for d in self.dpus)

    @property
    def dma_bytes(self) -> int:
        return sum(d.dma_bytes for d in self.dpus)

    @property
    def transfer_bytes(self) -> int:
        return self.c2d_bytes + self.d2c_bytes

    @property
    def ledger(self) -> KernelLedger:
        return KernelLedger.total([d.ledger for d in self.dpus])

    def recon_units(self, cfg: DpuConfig) -> float:
        return self.recon_ops * cfg.recon_op_cost

    def modeled_units(self, cfg: DpuConfig) -> dict[str, float]:
        """Model units per phase: sums over DPUs, plus host reconstruction."""
        units = {phase: 0.0 for phase in PHASES}
        for dpu in self.dpus:
            for phase, value in dpu.phase_units(cfg).items():
                units[phase] += value
        units[RECON] = self.recon_units(cfg)
        return units

    def rows(self, cfg: DpuConfig) -> list[dict[str, object]]:
        """One row per (DPU, phase) plus the host Recon. row, in CSV column order."""
        out: list[dict[str, object]] = []
        for dpu in self.dpus:
            units = dpu.phase_units(cfg)
            out.append(_row(dpu.dpu_id, C2D, dpu.c2d_bytes, 0, 0, units[C2D]))
            out.append(
                _row(dpu.dpu_id, COMP, dpu.dma_bytes, dpu.ledger.native_ops, dpu.ledger.emulated_float_ops, units[COMP])
            )
            out.append(_row(dpu.dpu_id, D2C, dpu.d2c_bytes, 0, 0, units[D2C]))
        out.append(_row(HOST, RECON, 0, self.recon_ops, 0, self.recon_units(cfg)))
        return out


def _row(dpu_id: int | str, phase: str, nbytes: int, int_ops: int, float_ops: int, units: float) -> dict[str, object]:
    return {
        "dpu_id": dpu_id,
        "phase": phase,
        "bytes": nbytes,
        "int_ops": int_ops,
        "float_ops": float_ops,
        "modeled_units": units,
    }


def write_trace_csv(trace: ExecutionTrace, cfg: DpuConfig, stream: IO[str]) -> None:
    writer = csv.DictWriter(stream, fieldnames=list(CSV_COLUMNS), lineterminator="\n")
    writer.writeheader()
    for row in trace.rows(cfg):
        writer.writerow(row)

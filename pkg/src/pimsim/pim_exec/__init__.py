# src/pimsim/pim_exec/__init__.py

"""
Simulated multi-DPU execution, host reconstruction and the cost model.
"""

from .capacity import CapacityViolation, capacity_check, payload_bytes, step_payload_bytes
from .config import CONFIG_ENV_VAR, DpuConfig, load_dpu_config, parse_overrides, state_bytes
from .reconstruct import recon_op_count, reconstruct
from .report import MODEL_UNITS, CostReport, DpuCost, PhaseCost, cost_report
from .runtime import DpuWorker, ExecutionResult, Interconnect, execute
from .trace import C2D, COMP, CSV_COLUMNS, D2C, PHASES, RECON, DpuTrace, ExecutionTrace, write_trace_csv

__all__ = [
    "C2D",
    "COMP",
    "CONFIG_ENV_VAR",
    "CSV_COLUMNS",
    "D2C",
    "MODEL_UNITS",
    "PHASES",
    "RECON",
    "CapacityViolation",
    "CostReport",
    "DpuConfig",
    "DpuCost",
    "DpuTrace",
    "DpuWorker",
    "ExecutionResult",
    "ExecutionTrace",
    "Interconnect",
    "PhaseCost",
    "capacity_check",
    "cost_report",
    "execute",
    "load_dpu_config",
    "parse_overrides",
    "payload_bytes",
    "recon_op_count",
    "reconstruct",
    "state_bytes",
    "step_payload_bytes",
    "write_trace_csv",
]

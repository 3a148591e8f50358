# src/pimsim/pipeline.py

"""
End-to-end scenario versions.

    baseline   every gate float-emulated on one DPU
    gm         gate merging; Gaussian-form gates become integer matrices
    rs         row swapping over the baseline; permutation gates become index swaps
    gm+rs      both
    vp         gm+rs per separable component, packed over several DPUs

Usage:
    run = run_pim(gen_benchmark("QRNG", 16), Scenario.VP, num_dpus=4)
    print(run.report.dominant_phase)
    reference = run_oracle(circuit)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from pimsim.circuit import require_valid
from pimsim.data import CircuitIR, LoweredProgram, PartitionPlan
from pimsim.intstate import QState
from pimsim.oracle import FloatState, simulate
from pimsim.passes import baseline_program, lower_permutations, merge_gates, pack, partition, quantize, whole_plan
from pimsim.passes.quantize import with_scale
from pimsim.pim_exec import CostReport, DpuConfig, ExecutionTrace, cost_report, execute, reconstruct
from pimsim.utils.logger import get_logger

logger = get_logger(__name__)

PASS_NAMES = ("gm", "rs", "vp")


class Scenario(str, Enum):
    BASELINE = "baseline"
    GM = "gm"
    RS = "rs"
    GM_RS = "gm+rs"
    VP = "vp"

    @classmethod
    def from_passes(cls, passes: Iterable[str]) -> Scenario:
        """Scenario for a pass selection; `vp` implies gm and rs."""
        chosen = {p.strip().lower() for p in passes if p.strip()}
        unknown = chosen - set(PASS_NAMES)
        if unknown:
            raise ValueError(f"unknown pass(es): {', '.join(sorted(unknown))}")
        if "vp" in chosen:
            return cls.VP
        if {"gm", "rs"} <= chosen:
            return cls.GM_RS
        if "gm" in chosen:
            return cls.GM
        if "rs" in chosen:
            return cls.RS
        return cls.BASELINE

    @property
    def merges(self) -> bool:
        return self in (Scenario.GM, Scenario.GM_RS, Scenario.VP)

    @property
    def swaps_rows(self) -> bool:
        return self in (Scenario.RS, Scenario.GM_RS, Scenario.VP)

    @property
    def partitions(self) -> bool:
        return self is Scenario.VP


def lower(circuit: CircuitIR, scenario: Scenario, budget_bytes: int | None = None) -> LoweredProgram:
    """Program for one (sub-)circuit; merged programs carry their quantization scale."""
    program = merge_gates(circuit) if scenario.merges else baseline_program(circuit)
    if scenario.swaps_rows:
        program = lower_permutations(program)
    if scenario.merges:
        budget = budget_bytes if budget_bytes is not None else DpuConfig().host_budget_bytes
        program = with_scale(program, quantize(circuit, program, budget))
    return program


def build_plan(
    circuit: CircuitIR,
    scenario: Scenario,
    num_dpus: int = 1,
    cfg: DpuConfig | None = None,
) -> tuple[PartitionPlan, list[LoweredProgram]]:
    """Packed plan and one lowered program per component."""
    cfg = cfg or DpuConfig()
    plan = partition(circuit) if scenario.partitions else whole_plan(circuit)
    plan = pack(plan, num_dpus, cfg)
    programs = [lower(c.circuit, scenario, cfg.host_budget_bytes) for c in plan.components]
    logger.debug("%s: %d component(s) lowered for %s", circuit.metadata.name or "circuit", len(programs), scenario.value)
    return plan, programs


@dataclass
class PimRun:
    circuit: CircuitIR
    scenario: Scenario
    plan: PartitionPlan
    programs: list[LoweredProgram]
    state: QState
    trace: ExecutionTrace
    cfg: DpuConfig

    @property
    def report(self) -> CostReport:
        return cost_report(self.trace, self.cfg)


def run_pim(
    circuit: CircuitIR,
    scenario: Scenario = Scenario.GM_RS,
    num_dpus: int = 1,
    cfg: DpuConfig | None = None,
) -> PimRun:
    """
    Lower, pack, execute and reconstruct one circuit.

    Raises:
        CircuitValidationError: invalid circuit
        CapacityError: the plan does not fit the DPUs
        MemoryBudgetError: quantization analysis exceeds the host budget
    """
    require_valid(circuit)
    cfg = cfg or DpuConfig()
    plan, programs = build_plan(circuit, scenario, num_dpus, cfg)
    result = execute(plan, programs, cfg)
    state = reconstruct(result.states, plan, result.trace)
    return PimRun(circuit, scenario, plan, programs, state, result.trace, cfg)


def run_oracle(circuit: CircuitIR, cfg: DpuConfig | None = None) -> FloatState:
    """Double-precision reference run on the host."""
    cfg = cfg or DpuConfig()
    return simulate(circuit, cfg.host_budget_bytes)

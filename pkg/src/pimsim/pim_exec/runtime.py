# src/pimsim/pim_exec/runtime.py

"""
Simulated multi-DPU runtime.

Each DPU is a share-nothing worker: it receives only its components' programs,
builds their initial states locally, runs the integer engine and hands results
back to the host. Workers run on a thread pool of `parallelism` threads; the
trace is built from counted quantities, so it does not depend on scheduling.

Usage:
    plan = pack(partition(circuit), num_dpus=4, dpu_config=cfg)
    result = execute(plan, programs, cfg)
    full = reconstruct(result.states, plan, result.trace)
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Any, Sequence

from pimsim.data import LoweredProgram, PartitionPlan
from pimsim.errors import CapacityError, ContractViolation, InterDpuCommunicationError
from pimsim.intstate import KernelLedger, QState, run_program
from pimsim.utils.logger import get_logger

from .capacity import capacity_check, errors_only, payload_bytes
from .config import DpuConfig, state_bytes
from .trace import DpuTrace, ExecutionTrace

logger = get_logger(__name__)


class Interconnect:
    """
    The (absent) DPU-to-DPU channel.

    DPUs have no direct path to each other; every send is refused and counted
    as an attempt, and the attempts are what the trace reports.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.attempts = 0

    def send(self, src: int, dst: int, payload: Any) -> None:
        with self._lock:
            self.attempts += 1
        raise InterDpuCommunicationError(f"DPU {src} tried to reach DPU {dst}: no inter-DPU channel")


class DpuWorker:
    """One DPU: its own component programs, ledger and byte counters."""

    def __init__(
        self,
        dpu_id: int,
        jobs: list[tuple[int, LoweredProgram]],
        cfg: DpuConfig,
        interconnect: Interconnect,
    ) -> None:
        self.dpu_id = dpu_id
        self.jobs = jobs
        self.cfg = cfg
        self._interconnect = interconnect
        self.trace = DpuTrace(dpu_id, [c for c, _ in jobs])

    def send(self, dst: int, payload: Any) -> None:
        self._interconnect.send(self.dpu_id, dst, payload)

    def run(self) -> dict[int, QState]:
        results: dict[int, QState] = {}
        for component, program in self.jobs:
            size = state_bytes(program.n_qubits, self.cfg)
            self.trace.footprint_bytes += size
            self.trace.c2d_bytes += size + payload_bytes(program)
            ledger = KernelLedger()
            state, _ = run_program(program, ledger=ledger, budget_bytes=max(self.cfg.mram_bytes, size))
            if size > self.cfg.wram_bytes:
                # every step streams the state MRAM -> WRAM -> MRAM
                self.trace.dma_bytes += 2 * size * len(program.steps)
            self.trace.ledger.merge(ledger)
            self.trace.d2c_bytes += size // 2 if self.cfg.return_probabilities else size
            results[component] = state
        logger.debug("DPU %d finished %d component(s)", self.dpu_id, len(self.jobs))
        return results


@dataclass
class ExecutionResult:
    states: list[QState]
    trace: ExecutionTrace


def execute(
    plan: PartitionPlan,
    programs: Sequence[LoweredProgram],
    cfg: DpuConfig | None = None,
    interconnect: Interconnect | None = None,
) -> ExecutionResult:
    """
    Run every component program on its assigned DPU.

    Raises:
        ContractViolation: programs do not match the plan's components
        CapacityError: capacity_check reported an error
        KernelOverflowError: a worker's numerators overflowed
    """
    cfg = cfg or DpuConfig()
    if not plan.is_assigned:
        raise ContractViolation("execute needs an assigned plan")
    if len(programs) != len(plan.components):
        raise ContractViolation(f"{len(programs)} programs for {len(plan.components)} components")
    for i, (component, program) in enumerate(zip(plan.components, programs)):
        if component.n_qubits != program.n_qubits:
            raise ContractViolation(f"program {i} has {program.n_qubits} qubits, component has {component.n_qubits}")

    violations = capacity_check(plan, cfg, programs)
    for v in violations:
        if v.severity == "warning":
            logger.warning("%s", v)
    errors = errors_only(violations)
    if errors:
        raise CapacityError("; ".join(str(v) for v in errors))

    interconnect = interconnect or Interconnect()
    workers = [
        DpuWorker(dpu, [(c, programs[c]) for c in plan.components_on(dpu)], cfg, interconnect)
        for dpu in plan.dpus_used()
    ]
    logger.info("dispatching %d component(s) to %d DPU(s)", len(plan.components), len(workers))

    states: dict[int, QState] = {}
    with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
        futures = {pool.submit(w.run): w for w in workers}
        for future in as_completed(futures):
            states.update(future.result())

    logger.info("collected %d result state(s)", len(states))
    trace = ExecutionTrace(
        dpus=sorted((w.trace for w in workers), key=lambda t: t.dpu_id),
        num_dpus=plan.num_dpus,
        inter_dpu_messages=interconnect.attempts,
    )
    return ExecutionResult([states[c] for c in range(len(plan.components))], trace)

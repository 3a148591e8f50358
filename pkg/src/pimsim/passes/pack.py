# src/pimsim/passes/pack.py

from __future__ import annotations

from pimsim.data import PartitionPlan
from pimsim.errors import CapacityError
from pimsim.pim_exec.config import DpuConfig, state_bytes
from pimsim.utils.logger import get_logger

logger = get_logger(__name__)


def pack(plan: PartitionPlan, num_dpus: int, dpu_config: DpuConfig | None = None) -> PartitionPlan:
    """
    Assign components to DPUs, first-fit-decreasing on state bytes.

    Components are taken largest first (ties: lowest qubit) and placed on the
    least-loaded DPU that still fits (ties: lowest DPU id).

    Raises:
        ValueError: num_dpus < 1
        CapacityError: a component exceeds MRAM, num_dpus exceeds the system, or the DPUs run out
    """
    cfg = dpu_config or DpuConfig()
    if num_dpus < 1:
        raise ValueError(f"num_dpus must be >= 1, got {num_dpus}")
    if num_dpus > cfg.max_dpus:
        raise CapacityError(f"{num_dpus} DPUs requested, system has {cfg.max_dpus}")

    sizes = [state_bytes(c.n_qubits, cfg) for c in plan.components]
    for i, size in enumerate(sizes):
        if size > cfg.mram_bytes:
            raise CapacityError(
                f"component exceeds MRAM: {plan.components[i].n_qubits} qubits need {size} B > {cfg.mram_bytes} B"
            )

    order = sorted(range(len(sizes)), key=lambda i: (-sizes[i], plan.components[i].qubits[0]))
    load = [0] * num_dpus
    assignment: dict[int, int] = {}
    for i in order:
        fits = [d for d in range(num_dpus) if load[d] + sizes[i] <= cfg.mram_bytes]
        if not fits:
            raise CapacityError(f"insufficient DPUs: component {i} ({sizes[i]} B) fits none of {num_dpus}")
        dpu = min(fits, key=lambda d: (load[d], d))
        assignment[i] = dpu
        load[dpu] += sizes[i]

    logger.debug("packed %d component(s) onto %d DPU(s)", len(sizes), len(set(assignment.values())))
    return PartitionPlan(plan.n_qubits, plan.components, assignment, num_dpus)

# src/pimsim/pim_exec/reconstruct.py

from __future__ import annotations

from typing import Sequence

import numpy as np

from pimsim.data import PartitionPlan
from pimsim.errors import ContractViolation, KernelOverflowError
from pimsim.intstate import QState
from pimsim.intstate.state import INT_LIMIT
from pimsim.utils.logger import get_logger

from .trace import ExecutionTrace

logger = get_logger(__name__)


def recon_op_count(plan: PartitionPlan) -> int:
    """2^n host products when more than one component is combined, else 0."""
    return 2**plan.n_qubits if len(plan.components) > 1 else 0


def _projection(n_qubits: int, qubits: Sequence[int]) -> np.ndarray:
    """For every global index j, the component-local index made of j's bits at `qubits`."""
    j = np.arange(2**n_qubits, dtype=np.int64)
    local = np.zeros_like(j)
    for i, q in enumerate(qubits):
        local |= ((j >> q) & 1) << i
    return local


def reconstruct(
    sub_states: Sequence[QState],
    plan: PartitionPlan,
    trace: ExecutionTrace | None = None,
) -> QState:
    """
    Tensor product of the component states in global qubit order.

    Numerator j is the product over components of nums_c[proj_c(j)]; s and k add up.

    Raises:
        ContractViolation: state count or component qubit sets do not partition [0, n)
        KernelOverflowError: the product numerators leave the int64 range
    """
    if len(sub_states) != len(plan.components):
        raise ContractViolation(f"{len(sub_states)} states for {len(plan.components)} components")
    seen = sorted(q for c in plan.components for q in c.qubits)
    if seen != list(range(plan.n_qubits)):
        raise ContractViolation(f"component qubits {seen} do not partition 0..{plan.n_qubits - 1}")

    ops = recon_op_count(plan)
    if trace is not None:
        trace.recon_ops = ops
    if len(sub_states) == 1:
        return sub_states[0].copy()

    bound = 1
    for state in sub_states:
        bound *= 2 * max(state.max_magnitude(), 1)
    if bound >= INT_LIMIT:
        raise KernelOverflowError("reconstructed numerators would overflow the int64 range")

    n = plan.n_qubits
    re = np.ones(2**n, dtype=np.int64)
    im = np.zeros(2**n, dtype=np.int64)
    for component, state in zip(plan.components, sub_states):
        proj = _projection(n, component.qubits)
        cr, ci = state.re[proj], state.im[proj]
        re, im = re * cr - im * ci, re * ci + im * cr
    result = QState(
        n,
        re,
        im,
        sum(s.half_shift for s in sub_states),
        sum(s.scale_k for s in sub_states),
    )
    logger.info("reconstructed %d-qubit state from %d components (%d products)", n, len(sub_states), ops)
    return result

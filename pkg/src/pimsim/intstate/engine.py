# src/pimsim/intstate/engine.py

from __future__ import annotations

from typing import Callable

from pimsim.data import LoweredProgram, ProgramStep
from pimsim.utils.logger import get_logger

from .kernels import apply_step
from .ledger import KernelLedger
from .state import DEFAULT_HOST_BUDGET, QState, init_state

logger = get_logger(__name__)

StepHook = Callable[[int, ProgramStep, QState], None]


def run_program(
    program: LoweredProgram,
    scale_k: int | None = None,
    ledger: KernelLedger | None = None,
    on_step: StepHook | None = None,
    check_normalization: bool = False,
    budget_bytes: int = DEFAULT_HOST_BUDGET,
) -> tuple[QState, KernelLedger]:
    """
    Execute a lowered program from |0...0>.

    Args:
        program: steps to run
        scale_k: initial scale exponent; defaults to program.scale_k
        ledger: ledger to charge; a fresh one is created when omitted
        on_step: called after every step with (step index, step, state)
        check_normalization: raise ContractViolation as soon as a step breaks the exact norm
        budget_bytes: host memory budget for the state

    Returns:
        (final state, ledger)
    """
    ledger = ledger if ledger is not None else KernelLedger()
    state = init_state(program.n_qubits, program.scale_k if scale_k is None else scale_k, budget_bytes)
    for i, step in enumerate(program.steps):
        state = apply_step(state, step, ledger)
        if check_normalization:
            state.check_normalized()
        if on_step is not None:
            on_step(i, step, state)
    logger.debug(
        "ran %d steps on %d qubits: s=%d k=%d native_ops=%d float_ops=%d",
        len(program.steps),
        program.n_qubits,
        state.half_shift,
        state.scale_k,
        ledger.native_ops,
        ledger.emulated_float_ops,
    )
    return state, ledger

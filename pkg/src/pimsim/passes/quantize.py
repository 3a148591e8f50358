# src/pimsim/passes/quantize.py

"""
State quantization: the smallest scale 2^k for the initial amplitude that keeps
every traced amplitude integral once the accumulated (sqrt 2) denominator is
folded in at even exponents.
"""

from __future__ import annotations

from dataclasses import replace

from pimsim.circuit import require_valid
from pimsim.data import CircuitIR, FloatEmuApply, IntMatrixApply, LoweredProgram, ProgramStep
from pimsim.errors import ContractViolation, MemoryBudgetError
from pimsim.intstate import DEFAULT_HOST_BUDGET, QState, run_program, state_footprint
from pimsim.utils.logger import get_logger

from .merge import merge_gates
from .permute import lower_permutations

logger = get_logger(__name__)

# Largest half-shift a single float-emulated catalog gate can add
_FLOAT_STEP_SHIFT = 3


class _NotIntegral(Exception):
    def __init__(self, index: int) -> None:
        self.index = index


def _check_integral(index: int, step: ProgramStep, state: QState) -> None:
    if not state.is_integral():
        raise _NotIntegral(index)


def _shift_bound(program: LoweredProgram) -> int:
    total = 0
    for step in program.steps:
        if isinstance(step, IntMatrixApply):
            total += step.matrix.half_shift
        elif isinstance(step, FloatEmuApply):
            total += _FLOAT_STEP_SHIFT
    return total


def first_non_integral_step(program: LoweredProgram, scale_k: int, budget_bytes: int = DEFAULT_HOST_BUDGET) -> int | None:
    """Index of the first step leaving a non-integral amplitude at this scale, or None."""
    try:
        run_program(program, scale_k=scale_k, on_step=_check_integral, budget_bytes=budget_bytes)
    except _NotIntegral as stop:
        return stop.index
    return None


def quantize(
    circuit: CircuitIR,
    program: LoweredProgram | None = None,
    budget_bytes: int = DEFAULT_HOST_BUDGET,
) -> int:
    """
    Minimal scale exponent k for the GM+RS-lowered program of `circuit`.

    Runs the exact engine at k = 0, 1, 2, ... and returns the first k at which
    every prefix is integral.

    Args:
        circuit: source circuit
        program: lowered program to analyse; defaults to lower_permutations(merge_gates(circuit))
        budget_bytes: host budget for the analysis state

    Raises:
        MemoryBudgetError: the circuit is too large to analyse on the host
    """
    require_valid(circuit)
    if state_footprint(circuit.n_qubits) > budget_bytes:
        raise MemoryBudgetError(f"{circuit.n_qubits} qubits is too large for quantization analysis")
    if program is None:
        program = lower_permutations(merge_gates(circuit))
    limit = (_shift_bound(program) + 1) // 2
    for k in range(limit + 1):
        failed_at = first_non_integral_step(program, k, budget_bytes)
        if failed_at is None:
            logger.debug("%s: quantization scale k=%d", circuit.metadata.name or "circuit", k)
            return k
        logger.debug("k=%d fails at step %d", k, failed_at)
    raise ContractViolation(f"no integral scale found up to k={limit}")


def with_scale(program: LoweredProgram, scale_k: int) -> LoweredProgram:
    return replace(program, scale_k=scale_k)

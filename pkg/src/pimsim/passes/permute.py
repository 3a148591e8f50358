# src/pimsim/passes/permute.py

"""
Row swapping: steps whose unitary is a 0/1 permutation run as element swaps.
"""

from __future__ import annotations

from dataclasses import replace

from pimsim.circuit import gate_int_form
from pimsim.data import FloatEmuApply, IntMatrixApply, LoweredProgram, PermApply, ProgramStep
from pimsim.data.program import PermLabel
from pimsim.utils.logger import get_logger

from .stats import with_variant_counts

logger = get_logger(__name__)

_KNOWN: dict[tuple[int, ...], PermLabel] = {
    (1, 0): "X",
    (0, 1, 3, 2): "CNOT",
    (0, 2, 1, 3): "SWAP",
    (0, 1, 2, 3, 4, 5, 7, 6): "CCX",
}


def permutation_label(source: tuple[int, ...]) -> PermLabel:
    return _KNOWN.get(source, "PERM")


def _lower(step: ProgramStep) -> PermApply | None:
    if isinstance(step, FloatEmuApply) and step.kind.name.is_permutation:
        source = gate_int_form(step.kind).permutation_source()
        return PermApply(permutation_label(source), step.qubits, source)
    if isinstance(step, IntMatrixApply) and step.matrix.is_permutation():
        source = step.matrix.permutation_source()
        return PermApply(permutation_label(source), step.matrix.operand_qubits, source)
    return None


def lower_permutations(program: LoweredProgram) -> LoweredProgram:
    """Replace every permutation-matrix step with a PermApply; idempotent."""
    steps: list[ProgramStep] = []
    lowered = 0
    for step in program.steps:
        perm = _lower(step)
        if perm is None:
            steps.append(step)
        else:
            steps.append(perm)
            lowered += 1
    logger.debug("lowered %d of %d steps to permutations", lowered, len(steps))
    stats = replace(program.stats, permutation_lowered=program.stats.permutation_lowered + lowered)
    return with_variant_counts(replace(program, steps=tuple(steps), stats=stats))

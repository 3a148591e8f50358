# src/pimsim/intstate/__init__.py

"""
Exact integer state-vector engine.

Usage:
    from pimsim.intstate import init_state, apply_int_matrix, probabilities
    from pimsim.circuit import gate_int_form
    from pimsim.data import GateKind

    state = init_state(1)
    state = apply_int_matrix(state, gate_int_form(GateKind.of("H")))
    probabilities(state)   # [Fraction(1, 2), Fraction(1, 2)]
"""

from .dump import StateDump, dump_state, load_state_dump, read_state_dump, write_state_dump
from .engine import run_program
from .kernels import apply_float_emu, apply_int_matrix, apply_permutation, apply_step, canonicalize, group_index
from .ledger import KernelLedger
from .state import (
    BYTES_PER_AMPLITUDE,
    DEFAULT_HOST_BUDGET,
    QState,
    init_state,
    probabilities,
    state_footprint,
    states_equal,
)

__all__ = [
    "BYTES_PER_AMPLITUDE",
    "DEFAULT_HOST_BUDGET",
    "KernelLedger",
    "QState",
    "StateDump",
    "apply_float_emu",
    "apply_int_matrix",
    "apply_permutation",
    "apply_step",
    "canonicalize",
    "dump_state",
    "group_index",
    "init_state",
    "load_state_dump",
    "probabilities",
    "read_state_dump",
    "run_program",
    "state_footprint",
    "states_equal",
    "write_state_dump",
]

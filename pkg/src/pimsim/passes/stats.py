# src/pimsim/passes/stats.py

from __future__ import annotations

from dataclasses import replace

from pimsim.data import LoweredProgram


def with_variant_counts(program: LoweredProgram) -> LoweredProgram:
    """Refresh the per-variant step counts in program.stats."""
    counts = program.variant_counts()
    stats = replace(
        program.stats,
        int_matrix=counts["int_matrix"],
        permutation=counts["permutation"],
        float_emu=counts["float_emu"],
    )
    return replace(program, stats=stats)

# src/pimsim/passes/__init__.py

"""
Circuit-to-program transformations.

    baseline_program     every op float-emulated
    merge_gates          gate merging (GM)
    lower_permutations   row swapping (RS)
    quantize             minimal initial scale 2^k
    partition / pack     vector partitioning (VP) and DPU assignment
"""

from .baseline import baseline_program
from .merge import merge_gates
from .pack import pack
from .partition import interaction_graph, partition, whole_plan
from .permute import lower_permutations, permutation_label
from .quantize import first_non_integral_step, quantize, with_scale
from .unitary import step_matrix, step_unitary

__all__ = [
    "baseline_program",
    "first_non_integral_step",
    "interaction_graph",
    "lower_permutations",
    "merge_gates",
    "pack",
    "partition",
    "permutation_label",
    "quantize",
    "step_matrix",
    "step_unitary",
    "whole_plan",
]

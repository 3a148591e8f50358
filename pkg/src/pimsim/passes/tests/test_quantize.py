"""
Tests for the minimal quantization scale.
"""

import pytest

from pimsim.circuit import gen_benchmark
from pimsim.errors import MemoryBudgetError
from pimsim.passes import first_non_integral_step, lower_permutations, merge_gates, quantize


def test_bv_needs_k_two() -> None:
    circuit = gen_benchmark("BV", 4, {"secret": "111", "final_layer_width": 4})
    program = lower_permutations(merge_gates(circuit))
    assert quantize(circuit) == 2
    assert first_non_integral_step(program, 2) is None
    assert first_non_integral_step(program, 1) is not None


@pytest.mark.parametrize("n", [2, 3, 4, 8])
def test_qrng_scale_grows_with_hadamard_pairs(n: int) -> None:
    assert quantize(gen_benchmark("QRNG", n)) == n // 2


def test_permutation_only_circuit_needs_no_scale() -> None:
    assert quantize(gen_benchmark("XOR", 8)) == 0


def test_analysis_respects_host_budget() -> None:
    with pytest.raises(MemoryBudgetError):
        quantize(gen_benchmark("QRNG", 12), budget_bytes=1024)

"""
Tests for per-DPU capacity checks and serialized program sizes.
"""

from fractions import Fraction

import pytest

from pimsim.circuit import gate_int_form, gen_benchmark
from pimsim.data import CircuitIR, FloatEmuApply, GateKind, GateOp, IntMatrixApply, LoweredProgram, PermApply
from pimsim.passes import pack, partition, whole_plan
from pimsim.pim_exec import DpuConfig, capacity_check, payload_bytes, step_payload_bytes

H = GateKind.of("H")


def test_step_payload_sizes() -> None:
    assert step_payload_bytes(IntMatrixApply(gate_int_form(H, (0,)))) == 4 * 8 + 4 + 4
    assert step_payload_bytes(PermApply("CNOT", (0, 1), (0, 1, 3, 2))) == 4 + 8 + 4
    assert step_payload_bytes(FloatEmuApply(GateKind.of("RZ", Fraction(1, 2)), (0,))) == 4 * 16 + 4
    program = LoweredProgram(2, (PermApply("X", (0,), (1, 0)), FloatEmuApply(H, (1,))))
    assert payload_bytes(program) == (4 + 4 + 2) + (4 * 16 + 4)


def test_two_ten_qubit_components_fit_one_dpu() -> None:
    chains = [GateOp.of("CNOT", q, q + 1) for q in (*range(9), *range(10, 19))]
    plan = pack(partition(CircuitIR(20, tuple(chains))), 1)
    assert [c.n_qubits for c in plan.components] == [10, 10]
    assert capacity_check(plan, DpuConfig()) == []


def test_wram_overflow_is_a_warning() -> None:
    cfg = DpuConfig(wram_bytes=32)
    plan = pack(whole_plan(gen_benchmark("QRNG", 2)), 1, cfg)
    violations = capacity_check(plan, cfg)
    assert [v.severity for v in violations] == ["warning"]
    assert "tiled via DMA" in str(violations[0])


def test_program_payload_counts_against_mram() -> None:
    cfg = DpuConfig(mram_bytes=70)
    plan = pack(whole_plan(gen_benchmark("XOR", 2)), 1, cfg)
    program = LoweredProgram(2, (PermApply("CNOT", (0, 1), (0, 1, 3, 2)),))
    assert capacity_check(plan, cfg) == []
    errors = capacity_check(plan, cfg, [program])
    assert [v.severity for v in errors] == ["error"]
    assert "exceeds MRAM" in errors[0].message


def test_unassigned_plan_is_rejected() -> None:
    with pytest.raises(ValueError):
        capacity_check(partition(gen_benchmark("QRNG", 2)), DpuConfig())

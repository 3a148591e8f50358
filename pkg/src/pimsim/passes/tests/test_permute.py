"""
Tests for row swapping: permutation lowering against dense matrices.
"""

import numpy as np

from pimsim.circuit import gen_benchmark
from pimsim.data import CircuitIR, GateOp, PermApply
from pimsim.intstate import QState, apply_permutation
from pimsim.oracle import circuit_unitary
from pimsim.passes import baseline_program, lower_permutations, merge_gates, permutation_label

_PERM_GATES = [("X", 1), ("CNOT", 2), ("SWAP", 2), ("CCX", 3)]


def test_xor_lowers_to_cnot_swaps() -> None:
    program = lower_permutations(baseline_program(gen_benchmark("XOR", 8)))
    assert len(program.steps) == 7
    assert all(isinstance(s, PermApply) and s.label == "CNOT" for s in program.steps)
    assert program.stats.permutation == 7
    assert program.stats.int_matrix == 0
    assert program.stats.float_emu == 0
    assert program.stats.permutation_lowered == 7


def test_lowering_is_idempotent() -> None:
    once = lower_permutations(merge_gates(gen_benchmark("BV", 6)))
    twice = lower_permutations(once)
    assert twice.steps == once.steps
    assert [s.label for s in once.steps if isinstance(s, PermApply)] == ["CNOT"] * 5


def test_non_permutation_steps_stay() -> None:
    program = lower_permutations(baseline_program(gen_benchmark("QRNG", 2)))
    assert program.stats.permutation == 0
    assert program.stats.float_emu == 2


def test_labels() -> None:
    assert permutation_label((1, 0)) == "X"
    assert permutation_label((0, 2, 1, 3)) == "SWAP"
    assert permutation_label((0, 1)) == "PERM"


def test_random_permutation_circuits_match_dense_unitary() -> None:
    """Index swaps reproduce the dense matrix-vector product exactly."""
    rng = np.random.Generator(np.random.PCG64(1234))
    for _ in range(1000):
        ops = []
        for _ in range(int(rng.integers(1, 12))):
            name, arity = _PERM_GATES[int(rng.integers(len(_PERM_GATES)))]
            qubits = [int(q) for q in rng.permutation(3)[:arity]]
            ops.append(GateOp.of(name, *qubits))
        circuit = CircuitIR(3, tuple(ops))
        program = lower_permutations(baseline_program(circuit))
        assert program.stats.float_emu == 0

        re = rng.integers(-1000, 1000, size=8).astype(np.int64)
        im = rng.integers(-1000, 1000, size=8).astype(np.int64)
        state = QState(3, re.copy(), im.copy())
        for step in program.steps:
            state = apply_permutation(state, step)

        expected = circuit_unitary(circuit) @ (re + 1j * im)
        assert np.array_equal(state.re, np.rint(expected.real).astype(np.int64))
        assert np.array_equal(state.im, np.rint(expected.imag).astype(np.int64))

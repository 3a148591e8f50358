"""
Tests for the integer kernels: matrix, permutation and float-emulated application.
"""

from fractions import Fraction

import numpy as np
import pytest

from pimsim.circuit import gate_int_form
from pimsim.data import FloatEmuApply, GateKind, PermApply
from pimsim.errors import CircuitValidationError, KernelOverflowError, MemoryBudgetError, NonGaussianAmplitudeError
from pimsim.intstate import (
    KernelLedger,
    QState,
    apply_float_emu,
    apply_int_matrix,
    apply_permutation,
    canonicalize,
    group_index,
    init_state,
    probabilities,
    states_equal,
)

H = GateKind.of("H")


def test_hadamard_on_zero() -> None:
    """H|0> = (1 + 1)/sqrt 2: numerators 1, s = 1."""
    ledger = KernelLedger()
    state = apply_int_matrix(init_state(1), gate_int_form(H), ledger)
    assert state.re.tolist() == [1, 1]
    assert state.im.tolist() == [0, 0]
    assert state.half_shift == 1
    assert probabilities(state) == [Fraction(1, 2), Fraction(1, 2)]
    assert (ledger.adds, ledger.subs, ledger.emulated_float_ops) == (1, 1, 0)


def test_ledger_scales_with_groups() -> None:
    ledger = KernelLedger()
    apply_int_matrix(init_state(3), gate_int_form(H, (1,)), ledger)
    assert (ledger.adds, ledger.subs) == (4, 4)


def test_two_hadamards_canonicalize_back_to_zero() -> None:
    state = init_state(1)
    state = apply_int_matrix(state, gate_int_form(H))
    state = apply_int_matrix(state, gate_int_form(H))
    assert state.re.tolist() == [1, 0]
    assert state.half_shift == 0
    assert states_equal(state, init_state(1))


def test_canonicalize_stops_at_half_shift() -> None:
    state = QState(1, np.array([8, 4], dtype=np.int64), np.array([0, 0], dtype=np.int64), half_shift=2)
    ledger = KernelLedger()
    canonicalize(state, ledger)
    assert state.re.tolist() == [4, 2]
    assert state.half_shift == 0
    assert ledger.shifts == 2


def test_canonicalize_leaves_odd_numerators() -> None:
    state = QState(1, np.array([1, 1], dtype=np.int64), np.array([0, 0], dtype=np.int64), half_shift=3)
    ledger = KernelLedger()
    canonicalize(state, ledger)
    assert state.half_shift == 3
    assert ledger.is_zero()


def test_group_index_puts_first_operand_in_msb() -> None:
    index = group_index(3, (0, 2))
    assert index[:, 0].tolist() == [0, 4, 1, 5]
    assert index[:, 1].tolist() == [2, 6, 3, 7]


def test_cnot_permutation() -> None:
    state = apply_permutation(init_state(2), PermApply("X", (0,), (1, 0)))
    assert state.re.tolist() == [0, 1, 0, 0]
    ledger = KernelLedger()
    state = apply_permutation(state, PermApply("CNOT", (0, 1), (0, 1, 3, 2)), ledger)
    assert state.re.tolist() == [0, 0, 0, 1]
    assert ledger.element_swaps == 1
    assert ledger.adds == ledger.subs == ledger.emulated_float_ops == 0


def test_permutation_keeps_numerator_multiset() -> None:
    rng = np.random.Generator(np.random.PCG64(5))
    re = rng.integers(-50, 50, size=8)
    im = rng.integers(-50, 50, size=8)
    state = QState(3, re.astype(np.int64), im.astype(np.int64), half_shift=3)
    out = apply_permutation(state, PermApply("CCX", (2, 0, 1), (0, 1, 2, 3, 4, 5, 7, 6)))
    assert sorted(out.re.tolist()) == sorted(state.re.tolist())
    assert sorted(out.im.tolist()) == sorted(state.im.tolist())
    assert out.half_shift == 3


def test_float_emu_matches_exact_and_charges_floats() -> None:
    exact = apply_int_matrix(init_state(3), gate_int_form(H, (2,)))
    ledger = KernelLedger()
    emulated = apply_float_emu(init_state(3), FloatEmuApply(H, (2,)), ledger)
    assert states_equal(exact, emulated)
    assert ledger.emulated_float_ops == 8 * 2
    assert ledger.native_ops == 0


def test_t_gate_on_one_is_exact() -> None:
    state = apply_permutation(init_state(1), PermApply("X", (0,), (1, 0)))
    state = apply_float_emu(state, FloatEmuApply(GateKind.of("T"), (0,)))
    assert (state.re.tolist(), state.im.tolist(), state.half_shift) == ([0, 1], [0, 1], 1)
    assert probabilities(state) == [0, 1]


def test_t_gate_on_plus_is_not_gaussian() -> None:
    plus = apply_int_matrix(init_state(1), gate_int_form(H))
    with pytest.raises(NonGaussianAmplitudeError):
        apply_float_emu(plus, FloatEmuApply(GateKind.of("T"), (0,)))


def test_overflow_is_detected_before_applying() -> None:
    state = QState(1, np.array([2**61, 0], dtype=np.int64), np.zeros(2, dtype=np.int64))
    with pytest.raises(KernelOverflowError):
        apply_int_matrix(state, gate_int_form(H))


def test_operands_out_of_range() -> None:
    with pytest.raises(CircuitValidationError):
        apply_int_matrix(init_state(2), gate_int_form(H, (2,)))
    with pytest.raises(CircuitValidationError):
        apply_permutation(init_state(2), PermApply("SWAP", (1, 1), (0, 2, 1, 3)))


def test_init_state_limits() -> None:
    with pytest.raises(MemoryBudgetError):
        init_state(30, budget_bytes=2**20)
    with pytest.raises(ValueError):
        init_state(0)
    scaled = init_state(2, scale_k=3)
    assert scaled.re[0] == 8
    assert scaled.is_normalized()
    assert states_equal(scaled, init_state(2))


def test_states_equal_rejects_odd_shift_gap() -> None:
    a = QState(1, np.array([1, 0], dtype=np.int64), np.zeros(2, dtype=np.int64), half_shift=0)
    b = QState(1, np.array([1, 0], dtype=np.int64), np.zeros(2, dtype=np.int64), half_shift=1)
    assert not states_equal(a, b)

"""
Exact normalization of the integer engine over the benchmark sweep.
"""

import pytest

from pimsim.circuit import BenchmarkFamily, gen_benchmark
from pimsim.data import GateOp
from pimsim.intstate import run_program
from pimsim.passes import baseline_program, first_non_integral_step
from pimsim.pipeline import Scenario, lower


@pytest.mark.parametrize("family", list(BenchmarkFamily), ids=lambda f: f.value)
@pytest.mark.parametrize("n", [2, 4, 8, 12])
@pytest.mark.parametrize("scenario", [Scenario.BASELINE, Scenario.GM, Scenario.GM_RS], ids=lambda s: s.value)
def test_norm_is_exact_after_every_step(family: BenchmarkFamily, n: int, scenario: Scenario) -> None:
    """sum |nums|^2 == 4^k * 2^s holds after each step, not just at the end."""
    program = lower(gen_benchmark(family, n), scenario)
    state, _ = run_program(program, check_normalization=True)
    assert sum(state.probabilities()) == 1


@pytest.mark.parametrize("family", list(BenchmarkFamily), ids=lambda f: f.value)
def test_quantized_programs_stay_integral(family: BenchmarkFamily) -> None:
    program = lower(gen_benchmark(family, 8), Scenario.GM_RS)
    assert first_non_integral_step(program, program.scale_k) is None


def test_step_hook_sees_every_step() -> None:
    program = baseline_program(gen_benchmark("EDC", 3))
    seen: list[int] = []
    run_program(program, on_step=lambda i, step, state: seen.append(i))
    assert seen == list(range(len(program.steps)))


def test_even_hadamard_runs_need_no_float_emulation() -> None:
    circuit = gen_benchmark("QRNG", 3)
    doubled = circuit.with_ops(circuit.ops + tuple(GateOp.of("H", q) for q in range(3)))
    state, ledger = run_program(lower(doubled, Scenario.GM_RS))
    assert ledger.emulated_float_ops == 0
    assert state.re.tolist()[0] == 1
    assert not any(state.re.tolist()[1:])
    assert state.half_shift == 0


def test_baseline_charges_float_ops() -> None:
    _, ledger = run_program(baseline_program(gen_benchmark("QRNG", 3)))
    assert ledger.emulated_float_ops == 3 * 8 * 2

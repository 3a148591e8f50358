"""
Tests for the four-phase cost report and the trace CSV.
"""

import csv
import io

import pytest

from pimsim.circuit import gen_benchmark
from pimsim.data import CircuitIR, GateOp
from pimsim.pim_exec import C2D, COMP, CSV_COLUMNS, MODEL_UNITS, PHASES, RECON, CostReport, DpuConfig, write_trace_csv
from pimsim.pipeline import Scenario, run_pim


def _two_chains() -> CircuitIR:
    chains = [GateOp.of("CNOT", q, q + 1) for q in (*range(9), *range(10, 19))]
    return CircuitIR(20, tuple(chains))


def test_footprint_of_split_and_unsplit_states() -> None:
    """One 20-qubit state is 16 MB; two 10-qubit components are 32 KB together."""
    whole = run_pim(_two_chains(), Scenario.RS).report
    split = run_pim(_two_chains(), Scenario.VP, num_dpus=1).report
    assert whole.total_footprint_bytes == 16 * 2**20
    assert whole.total_footprint == "16 MB"
    assert split.total_footprint_bytes == 32 * 2**10
    assert split.total_footprint == "32 KB"
    assert split.dpus[0].components == [0, 1]


def test_report_shape() -> None:
    report = run_pim(gen_benchmark("BV", 6)).report
    assert report.units == MODEL_UNITS
    assert [p.phase for p in report.phases] == list(PHASES)
    assert sum(p.fraction for p in report.phases) == pytest.approx(1.0)
    assert report.fraction(RECON) == 0.0
    assert report.dominant_phase in PHASES
    assert report.inter_dpu_messages == 0
    assert report.dpus[0].utilisation == 1.0


def _phase_units(report: CostReport, phase: str) -> float:
    return next(p.units for p in report.phases if p.phase == phase)


@pytest.mark.parametrize("family", ["BB", "BV", "EDC", "HS", "QRNG"])
def test_integer_scenarios_cost_less_than_baseline(family: str) -> None:
    """Integer kernels lower the modelled Comp. cost for every non-XOR family."""
    circuit = gen_benchmark(family, 8)
    baseline = run_pim(circuit, Scenario.BASELINE).report
    merged = run_pim(circuit, Scenario.GM_RS).report
    assert _phase_units(merged, COMP) < _phase_units(baseline, COMP)
    assert merged.total_units < baseline.total_units
    assert baseline.dpus[0].int_ops == 0


def test_row_swapping_beats_float_emulated_cnots() -> None:
    circuit = gen_benchmark("XOR", 8)
    baseline = run_pim(circuit, Scenario.BASELINE).report
    swapped = run_pim(circuit, Scenario.RS).report
    assert swapped.fraction(COMP) < baseline.fraction(COMP)
    assert swapped.total_units < baseline.total_units


@pytest.mark.parametrize("family", ["QRNG", "BB"])
def test_partitioning_shrinks_transfers(family: str) -> None:
    circuit = gen_benchmark(family, 16)
    whole = run_pim(circuit, Scenario.GM_RS).report
    split = run_pim(circuit, Scenario.VP, num_dpus=4).report
    assert split.transfer_bytes < whole.transfer_bytes
    assert split.total_footprint_bytes == 16 * 32
    assert split.dpus_used == 4


def test_trace_csv() -> None:
    cfg = DpuConfig()
    run = run_pim(gen_benchmark("QRNG", 8), Scenario.VP, num_dpus=4, cfg=cfg)
    stream = io.StringIO()
    write_trace_csv(run.trace, cfg, stream)
    rows = list(csv.DictReader(io.StringIO(stream.getvalue())))
    assert stream.getvalue().splitlines()[0] == ",".join(CSV_COLUMNS)
    assert len(rows) == 4 * 3 + 1
    assert rows[0]["phase"] == C2D
    assert rows[-1]["dpu_id"] == "host"
    assert rows[-1]["phase"] == RECON
    assert int(rows[-1]["int_ops"]) == 2**8

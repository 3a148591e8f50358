# src/pimsim/cli/commands/verify.py

"""
`pimsim verify`: regression check of the PIM engine against the oracle.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

import click
from pydantic import ValidationError
from tabulate import tabulate

from pimsim.errors import ContractViolation, MemoryBudgetError
from pimsim.intstate import read_state_dump, states_equal
from pimsim.oracle import compare
from pimsim.pipeline import Scenario, run_oracle, run_pim
from pimsim.utils.logger import get_logger

from ..config import RunSpec, split_passes
from ..outputs import VerifyCheck, VerifyOutput
from .run import dpu_options, input_options

logger = get_logger(__name__)

DEFAULT_MAX_QUBITS = 16


@click.command()
@input_options
@click.option("--passes", default="gm,rs", show_default=True, help="Comma-separated subset of gm,rs,vp.")
@dpu_options
@click.option("--tol", type=float, default=1e-9, show_default=True, help="Max allowed elementwise deviation.")
@click.option("--golden", type=click.Path(exists=True, dir_okay=False, path_type=Path), help="Expected exact state dump.")
@click.option("--max-qubits", type=int, default=DEFAULT_MAX_QUBITS, show_default=True, help="Verification cap.")
@click.option("--format", "output_format", type=click.Choice(["json", "text"]), default="text", show_default=True)
def verify(
    bench: Optional[str],
    qasm_file: Optional[Path],
    secret: Optional[str],
    passes: str,
    num_dpus: int,
    dpu_config: Optional[Path],
    dpu_opts: tuple[str, ...],
    tol: float,
    golden: Optional[Path],
    max_qubits: int,
    output_format: str,
) -> None:
    """
    Run both engines with and without the selected passes and compare.

    Exits 0 when every deviation is within --tol, 3 otherwise.
    """
    spec = RunSpec(
        bench=bench,
        qasm_file=qasm_file,
        passes=split_passes(passes),
        num_dpus=num_dpus,
        dpu_config=dpu_config,
        dpu_overrides=dpu_opts,
        secret=secret,
    )
    cfg = spec.dpu()
    circuit = spec.circuit()
    if circuit.n_qubits > max_qubits:
        raise MemoryBudgetError(f"{circuit.n_qubits} qubits exceeds the verification cap of {max_qubits}")
    name = circuit.metadata.name or spec.input_label

    reference = run_oracle(circuit, cfg)
    selected = run_pim(circuit, spec.scenario, spec.num_dpus, cfg)
    baseline = run_pim(circuit, Scenario.BASELINE, 1, cfg)

    checks: list[VerifyCheck] = []
    for label, state in ((spec.scenario.value, selected.state), (Scenario.BASELINE.value, baseline.state)):
        result = compare(state, reference, tol)
        checks.append(
            VerifyCheck(name=f"pim[{label}] vs oracle", max_deviation=result.max_deviation, passed=result.passed)
        )
    same = states_equal(selected.state, baseline.state)
    checks.append(VerifyCheck(name="pim passes vs pim baseline (exact)", max_deviation=0.0 if same else 1.0, passed=same))

    if golden is not None:
        try:
            expected = read_state_dump(golden)
        except (ValidationError, json.JSONDecodeError, ValueError) as e:
            raise ContractViolation(f"golden file {golden} is unreadable: {e}") from e
        if expected.n_qubits != circuit.n_qubits:
            checks.append(VerifyCheck(name="golden", max_deviation=float("inf"), passed=False))
        else:
            exact = states_equal(selected.state, expected)
            deviation = compare(selected.state, expected, tol).max_deviation
            checks.append(VerifyCheck(name="golden (exact)", max_deviation=deviation, passed=exact))

    worst = max(c.max_deviation for c in checks)
    output = VerifyOutput(
        circuit=name,
        n_qubits=circuit.n_qubits,
        scenario=spec.scenario.value,
        tolerance=tol,
        checks=checks,
        max_deviation=worst,
        passed=all(c.passed for c in checks),
    )
    if output_format == "json":
        click.echo(output.model_dump_json(indent=2))
    else:
        rows = [[c.name, f"{c.max_deviation:.3e}", "ok" if c.passed else "FAIL"] for c in checks]
        click.echo(tabulate(rows, headers=["Check", "Max deviation", "Result"], tablefmt="simple"))
        click.echo(f"max deviation {worst:.3e} (tol {tol:g})")

    if not output.passed:
        failed = ", ".join(c.name for c in checks if not c.passed)
        logger.warning("verification failed for %s: %s", name, failed)
        raise ContractViolation(f"verification failed: {failed}")

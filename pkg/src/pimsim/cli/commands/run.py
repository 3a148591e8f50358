# src/pimsim/cli/commands/run.py

"""
`pimsim run`: execute one circuit on the oracle or the simulated PIM system.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Optional

import click
import numpy as np
from tabulate import tabulate

from pimsim.pim_exec import CostReport, write_trace_csv
from pimsim.pipeline import run_oracle, run_pim
from pimsim.utils.formatting import format_percent, format_size

from ..config import RunSpec, split_passes
from ..outputs import RunOutput, Samples, draw_samples, float_probabilities, pim_run_output


def input_options(f):  # type: ignore[no-untyped-def]
    """Options shared by every command that takes a circuit."""
    f = click.option("--secret", default=None, help="BV secret bit string (length n-1).")(f)
    qasm_path = click.Path(exists=True, dir_okay=False, path_type=Path)
    f = click.option("--qasm", "qasm_file", type=qasm_path, help="OpenQASM 2.0 input file.")(f)
    f = click.option("--bench", default=None, help="Benchmark selector family:n[:key=value,...], e.g. bv:4.")(f)
    return f


def dpu_options(f):  # type: ignore[no-untyped-def]
    f = click.option("--dpu-opt", "dpu_opts", multiple=True, help="DpuConfig override KEY=VALUE (repeatable).")(f)
    config_path = click.Path(exists=True, dir_okay=False, path_type=Path)
    f = click.option("--dpu-config", type=config_path, help="DpuConfig JSON/YAML file.")(f)
    f = click.option("--dpus", "num_dpus", type=int, default=1, show_default=True, help="Number of DPUs.")(f)
    return f


def render_cost_table(report: CostReport) -> str:
    rows = [[p.phase, f"{p.units:.1f}", format_percent(p.fraction)] for p in report.phases]
    rows.append(["Total", f"{report.total_units:.1f}", format_percent(1.0 if report.total_units else 0.0)])
    return tabulate(rows, headers=["Phase", f"Cost ({report.units})", "Share"], tablefmt="grid")


def render_dpu_table(report: CostReport) -> str:
    rows = [
        [
            d.dpu_id,
            ",".join(map(str, d.components)),
            d.footprint,
            d.int_ops,
            d.float_ops,
            f"{d.comp_units:.1f}",
            format_percent(d.utilisation),
        ]
        for d in report.dpus
    ]
    headers = ["DPU", "Components", "Footprint", "Int ops", "Float ops", "Comp.", "Utilisation"]
    return tabulate(rows, headers=headers, tablefmt="grid")


def render_text(output: RunOutput) -> str:
    parts = [f"{output.circuit}: {output.n_qubits} qubits, engine={output.engine}, scenario={output.scenario}", ""]
    rows = [[p.basis, p.probability] for p in output.probabilities]
    parts.append(tabulate(rows, headers=["Basis", "Probability"], tablefmt="simple"))
    report = output.cost
    if report is not None:
        parts += ["", render_cost_table(report), "", render_dpu_table(report)]
        parts.append(
            f"DPUs used {report.dpus_used}/{report.dpus_available}, "
            f"footprint {report.total_footprint}, transfers {format_size(report.transfer_bytes)}, "
            f"dominant phase {report.dominant_phase}, inter-DPU messages {report.inter_dpu_messages}"
        )
    if output.samples is not None:
        rows = [[basis, count] for basis, count in output.samples.counts.items()]
        parts += ["", f"{output.samples.shots} samples (seed {output.samples.seed})"]
        parts.append(tabulate(rows, headers=["Basis", "Count"], tablefmt="simple"))
    return "\n".join(parts)


@click.command()
@input_options
@click.option("--engine", type=click.Choice(["oracle", "pim"]), default="pim", show_default=True)
@click.option("--passes", default="", help="Comma-separated subset of gm,rs,vp (empty for the baseline).")
@dpu_options
@click.option("--format", "output_format", type=click.Choice(["json", "csv", "text"]), default="text", show_default=True)
@click.option("--samples", "sample_count", type=int, default=0, help="Measurement samples to draw.")
@click.option("--seed", type=int, default=None, help="Sampling seed (required with --samples).")
def run(
    bench: Optional[str],
    qasm_file: Optional[Path],
    secret: Optional[str],
    engine: str,
    passes: str,
    num_dpus: int,
    dpu_config: Optional[Path],
    dpu_opts: tuple[str, ...],
    output_format: str,
    sample_count: int,
    seed: Optional[int],
) -> None:
    """
    Run a circuit and report final probabilities.

    The pim engine reports exact probabilities and the four-phase cost
    breakdown in model units; the oracle engine reports doubles.
    """
    spec = RunSpec(
        bench=bench,
        qasm_file=qasm_file,
        engine=engine,  # type: ignore[arg-type]
        passes=split_passes(passes),
        num_dpus=num_dpus,
        dpu_config=dpu_config,
        dpu_overrides=dpu_opts,
        output_format=output_format,  # type: ignore[arg-type]
        sample_count=sample_count,
        seed=seed,
        secret=secret,
    )
    cfg = spec.dpu()
    circuit = spec.circuit()
    name = circuit.metadata.name or spec.input_label

    if spec.engine == "oracle":
        state = run_oracle(circuit, cfg)
        samples = _samples(spec, state.probabilities(), circuit.n_qubits)
        output = RunOutput(
            circuit=name,
            n_qubits=circuit.n_qubits,
            engine="oracle",
            scenario="oracle",
            probabilities=float_probabilities(state),
            samples=samples,
        )
        if spec.output_format == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer)
            writer.writerow(["index", "basis", "probability"])
            writer.writerows([p.index, p.basis, p.probability] for p in output.probabilities)
            click.echo(buffer.getvalue(), nl=False)
            return
    else:
        result = run_pim(circuit, spec.scenario, spec.num_dpus, cfg)
        probs = np.array([float(p) for p in result.state.probabilities()])
        output = pim_run_output(result, name, _samples(spec, probs, circuit.n_qubits))
        if spec.output_format == "csv":
            buffer = io.StringIO()
            write_trace_csv(result.trace, cfg, buffer)
            click.echo(buffer.getvalue(), nl=False)
            return

    if spec.output_format == "json":
        click.echo(output.model_dump_json(indent=2))
    else:
        click.echo(render_text(output))


def _samples(spec: RunSpec, probabilities: np.ndarray, n_qubits: int) -> Samples | None:
    if not spec.sample_count:
        return None
    assert spec.seed is not None
    return draw_samples(probabilities, n_qubits, spec.sample_count, spec.seed)

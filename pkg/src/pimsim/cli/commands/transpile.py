# src/pimsim/cli/commands/transpile.py

"""
`pimsim transpile`: dump lowered programs and the packed partition plan.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click
from tabulate import tabulate

from pimsim.pipeline import build_plan
from pimsim.qasm_frontend import emit

from ..config import RunSpec, split_passes
from ..outputs import TranspileOutput, transpile_output
from .run import dpu_options, input_options


def render_stats(output: TranspileOutput) -> str:
    stats = output.stats
    rows = [
        ["components", stats.components],
        ["merged pairs", stats.merged_pairs],
        ["fused gates", stats.fused_gates],
        ["odd residual", stats.odd_residual],
        ["permutation lowered", stats.permutation_lowered],
        ["quantization k", stats.quantization_k],
        ["int matrix steps", stats.int_matrix],
        ["permutation steps", stats.permutation],
        ["float-emulated steps", stats.float_emu],
    ]
    return tabulate(rows, headers=["Stat", "Value"], tablefmt="simple")


@click.command()
@input_options
@click.option("--passes", default="", help="Comma-separated subset of gm,rs,vp (empty for the baseline).")
@dpu_options
@click.option("--format", "output_format", type=click.Choice(["json", "text", "qasm"]), default="json", show_default=True)
def transpile(
    bench: Optional[str],
    qasm_file: Optional[Path],
    secret: Optional[str],
    passes: str,
    num_dpus: int,
    dpu_config: Optional[Path],
    dpu_opts: tuple[str, ...],
    output_format: str,
) -> None:
    """
    Lower a circuit with the selected passes and print the artifacts.

    `--format qasm` prints the input circuit as OpenQASM 2.0 instead.
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
    circuit = spec.circuit()
    if output_format == "qasm":
        click.echo(emit(circuit), nl=False)
        return

    plan, programs = build_plan(circuit, spec.scenario, spec.num_dpus, spec.dpu())
    output = transpile_output(circuit.metadata.name or spec.input_label, spec.scenario.value, plan, programs)
    if output_format == "json":
        click.echo(output.model_dump_json(indent=2))
        return

    click.echo(f"{output.circuit}: {output.n_qubits} qubits, scenario={output.scenario}")
    for i, component in enumerate(output.components):
        steps = ", ".join(f"{s.variant}{tuple(s.qubits)}" for s in component.steps) or "(no steps)"
        click.echo(f"  component {i} qubits={component.qubits} dpu={component.dpu_id} k={component.scale_k}: {steps}")
    click.echo(render_stats(output))

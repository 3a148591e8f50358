# src/pimsim/cli/outputs.py

"""
Published output schemas for `run`, `verify` and `transpile`.

JSON output is always produced through these models, so `pimsim schema`
prints exactly what the commands emit.
"""

from __future__ import annotations

from collections import Counter
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field

from pimsim.data import FloatEmuApply, IntMatrixApply, LoweredProgram, PartitionPlan, PermApply, ProgramStep
from pimsim.intstate import QState
from pimsim.oracle import FloatState
from pimsim.pim_exec import CostReport
from pimsim.pipeline import PimRun


class Probability(BaseModel):
    index: int = Field(..., ge=0, description="Basis index; qubit 0 is bit 0.")
    basis: str = Field(..., description="Basis label, qubit n-1 first.")
    probability: str | float = Field(..., description="Exact 'p/q' for the pim engine, a double for the oracle.")


class Samples(BaseModel):
    seed: int
    shots: int
    counts: dict[str, int] = Field(..., description="Basis label -> number of draws.")


class RunOutput(BaseModel):
    circuit: str
    n_qubits: int
    engine: Literal["oracle", "pim"]
    scenario: str
    probabilities: list[Probability] = Field(..., description="Nonzero probabilities in basis order.")
    cost: CostReport | None = Field(None, description="Four-phase breakdown; pim engine only.")
    samples: Samples | None = None


class VerifyCheck(BaseModel):
    name: str
    max_deviation: float
    passed: bool


class VerifyOutput(BaseModel):
    circuit: str
    n_qubits: int
    scenario: str
    tolerance: float
    checks: list[VerifyCheck]
    max_deviation: float
    passed: bool


class StepOutput(BaseModel):
    variant: Literal["int_matrix", "permutation", "float_emu"]
    qubits: list[int]
    label: str | None = Field(None, description="Permutation label or float-emulated gate.")
    half_shift: int | None = Field(None, description="d of an integer matrix: entries / (sqrt 2)^d.")
    entries: list[list[tuple[int, int]]] | None = Field(None, description="Integer matrix rows as [re, im] pairs.")
    source: list[int] | None = Field(None, description="Permutation source table: out[i] = in[source[i]].")


class ComponentOutput(BaseModel):
    qubits: list[int] = Field(..., description="Global qubits; local qubit i is qubits[i].")
    dpu_id: int
    scale_k: int
    steps: list[StepOutput]


class TranspileStats(BaseModel):
    merged_pairs: int
    fused_gates: int
    odd_residual: int
    permutation_lowered: int
    components: int
    quantization_k: int = Field(..., description="Largest per-component scale exponent.")
    int_matrix: int
    permutation: int
    float_emu: int


class TranspileOutput(BaseModel):
    circuit: str
    n_qubits: int
    scenario: str
    num_dpus: int
    components: list[ComponentOutput]
    stats: TranspileStats


def basis_label(index: int, n_qubits: int) -> str:
    return format(index, f"0{n_qubits}b")


def exact_probabilities(state: QState) -> list[Probability]:
    return [
        Probability(index=j, basis=basis_label(j, state.n_qubits), probability=str(p))
        for j, p in enumerate(state.probabilities())
        if p
    ]


def float_probabilities(state: FloatState, cutoff: float = 1e-12) -> list[Probability]:
    return [
        Probability(index=j, basis=basis_label(j, state.n_qubits), probability=float(p))
        for j, p in enumerate(state.probabilities())
        if p > cutoff
    ]


def draw_samples(probabilities: np.ndarray, n_qubits: int, shots: int, seed: int) -> Samples:
    """Seeded draws (numpy PCG64) from a probability vector."""
    rng = np.random.Generator(np.random.PCG64(seed))
    p = np.asarray(probabilities, dtype=np.float64)
    drawn = rng.choice(p.size, size=shots, p=p / p.sum())
    counts = Counter(basis_label(int(j), n_qubits) for j in drawn)
    return Samples(seed=seed, shots=shots, counts=dict(sorted(counts.items())))


def step_output(step: ProgramStep) -> StepOutput:
    if isinstance(step, IntMatrixApply):
        return StepOutput(
            variant="int_matrix",
            qubits=list(step.qubits),
            half_shift=step.matrix.half_shift,
            entries=[[(z.re, z.im) for z in row] for row in step.matrix.entries],
        )
    if isinstance(step, PermApply):
        return StepOutput(variant="permutation", qubits=list(step.qubits), label=step.label, source=list(step.source))
    assert isinstance(step, FloatEmuApply)
    return StepOutput(variant="float_emu", qubits=list(step.qubits), label=str(step.kind))


def transpile_output(
    name: str,
    scenario: str,
    plan: PartitionPlan,
    programs: list[LoweredProgram],
) -> TranspileOutput:
    components = [
        ComponentOutput(
            qubits=list(component.qubits),
            dpu_id=plan.assignment[i],
            scale_k=program.scale_k,
            steps=[step_output(s) for s in program.steps],
        )
        for i, (component, program) in enumerate(zip(plan.components, programs))
    ]
    totals = Counter[str]()
    for program in programs:
        totals.update(program.stats.as_dict())
        totals.update({f"steps_{k}": v for k, v in program.variant_counts().items()})
    stats = TranspileStats(
        merged_pairs=totals["merged_pairs"],
        fused_gates=totals["fused_gates"],
        odd_residual=totals["odd_residual"],
        permutation_lowered=totals["permutation_lowered"],
        components=len(plan.components),
        quantization_k=max((p.scale_k for p in programs), default=0),
        int_matrix=totals["steps_int_matrix"],
        permutation=totals["steps_permutation"],
        float_emu=totals["steps_float_emu"],
    )
    return TranspileOutput(
        circuit=name,
        n_qubits=plan.n_qubits,
        scenario=scenario,
        num_dpus=plan.num_dpus,
        components=components,
        stats=stats,
    )


def pim_run_output(run: PimRun, name: str, samples: Samples | None = None) -> RunOutput:
    return RunOutput(
        circuit=name,
        n_qubits=run.circuit.n_qubits,
        engine="pim",
        scenario=run.scenario.value,
        probabilities=exact_probabilities(run.state),
        cost=run.report,
        samples=samples,
    )


SCHEMAS: dict[str, type[BaseModel]] = {
    "run": RunOutput,
    "verify": VerifyOutput,
    "transpile": TranspileOutput,
}

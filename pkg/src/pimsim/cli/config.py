# src/pimsim/cli/config.py

"""
Run configuration for the CLI: the RunSpec dataclass, benchmark selectors and
input resolution.

Selector syntax is `family:n[:key=value,...]`, e.g. `bv:4`, `bv:4:secret=101`,
`bb:8:bits=00110101,bases=11110000`. File inputs must end in `.qasm`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from pimsim.circuit import BenchmarkFamily, gen_benchmark
from pimsim.data import CircuitIR
from pimsim.errors import BenchmarkError, QasmParseError
from pimsim.pim_exec import DpuConfig, load_dpu_config, parse_overrides
from pimsim.pipeline import Scenario
from pimsim.qasm_frontend import parse
from pimsim.utils.logger import get_logger

logger = get_logger(__name__)

Engine = Literal["oracle", "pim"]
OutputFormat = Literal["json", "csv", "text"]


@dataclass(frozen=True)
class BenchSelector:
    family: BenchmarkFamily
    n: int
    params: dict[str, str] = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> BenchSelector:
        parts = text.strip().split(":", 2)
        if len(parts) < 2:
            raise BenchmarkError(f"benchmark selector {text!r} is not family:n[:key=value,...]")
        family = BenchmarkFamily.parse(parts[0])
        try:
            n = int(parts[1])
        except ValueError:
            raise BenchmarkError(f"benchmark size {parts[1]!r} is not an integer") from None
        params: dict[str, str] = {}
        if len(parts) == 3 and parts[2]:
            for pair in parts[2].split(","):
                key, sep, value = pair.partition("=")
                if not sep or not key.strip():
                    raise BenchmarkError(f"benchmark parameter {pair!r} is not key=value")
                params[key.strip()] = value.strip()
        return cls(family, n, params)

    def circuit(self, secret: str | None = None, seed: int = 0) -> CircuitIR:
        params = dict(self.params)
        if secret is not None:
            if self.family is not BenchmarkFamily.BV:
                raise BenchmarkError("--secret only applies to the bv family")
            params["secret"] = secret
        return gen_benchmark(self.family, self.n, params, seed=seed)


@dataclass
class RunSpec:
    """Everything one CLI invocation needs; validated on construction."""

    bench: str | None = None
    qasm_file: Path | None = None
    engine: Engine = "pim"
    passes: tuple[str, ...] = ()
    num_dpus: int = 1
    dpu_config: Path | None = None
    dpu_overrides: tuple[str, ...] = ()
    output_format: OutputFormat = "text"
    sample_count: int = 0
    seed: int | None = None
    secret: str | None = None

    def __post_init__(self) -> None:
        if (self.bench is None) == (self.qasm_file is None):
            raise ValueError("give exactly one of a benchmark selector or a .qasm file")
        if self.qasm_file is not None and self.qasm_file.suffix.lower() != ".qasm":
            raise ValueError(f"input file {self.qasm_file} must have the .qasm extension")
        if self.engine not in ("oracle", "pim"):
            raise ValueError(f"engine must be oracle or pim, got {self.engine!r}")
        # raises on unknown pass names
        scenario = Scenario.from_passes(self.passes)
        if scenario.partitions and self.engine != "pim":
            raise ValueError("vp requires --engine pim")
        if self.num_dpus < 1:
            raise ValueError(f"--dpus must be >= 1, got {self.num_dpus}")
        if self.sample_count < 0:
            raise ValueError(f"--samples must be >= 0, got {self.sample_count}")
        if self.sample_count and self.seed is None:
            raise ValueError("sampling needs an explicit --seed")

    @property
    def scenario(self) -> Scenario:
        return Scenario.from_passes(self.passes)

    @property
    def input_label(self) -> str:
        return self.bench if self.bench is not None else str(self.qasm_file)

    def dpu(self) -> DpuConfig:
        return load_dpu_config(self.dpu_config, parse_overrides(self.dpu_overrides))

    def circuit(self) -> CircuitIR:
        return resolve_circuit(self.bench, self.qasm_file, self.secret)


def split_passes(value: str | None) -> tuple[str, ...]:
    """'gm,rs' -> ('gm', 'rs'); empty or 'none' -> ()."""
    if not value or value.strip().lower() in ("none", "baseline"):
        return ()
    return tuple(p.strip().lower() for p in value.split(",") if p.strip())


def resolve_circuit(bench: str | None, qasm_file: Path | None, secret: str | None = None) -> CircuitIR:
    """
    Circuit from a benchmark selector or a .qasm file.

    Raises:
        BenchmarkError: bad selector or parameters
        QasmParseError: the file produced diagnostics
    """
    if bench is not None:
        return BenchSelector.parse(bench).circuit(secret)
    assert qasm_file is not None
    result = parse(qasm_file.read_bytes())
    if isinstance(result, list):
        raise QasmParseError(result)
    logger.info("parsed %s: %d qubits, %d ops", qasm_file, result.n_qubits, len(result.ops))
    return result

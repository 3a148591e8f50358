# src/pimsim/pim_exec/config.py

"""
DPU configuration.

Values resolve in order: defaults, the file named by PIMSIM_DPU_CONFIG, an
explicit config file, then KEY=VALUE overrides. Files are JSON, or YAML when
the extension is .yaml/.yml.

Usage:
    from pimsim.pim_exec import load_dpu_config

    cfg = load_dpu_config()                                   # defaults + env file
    cfg = load_dpu_config(Path("dpu.yaml"), {"parallelism": "4"})
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Mapping

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from pimsim.errors import DpuConfigError
from pimsim.utils.logger import get_logger

logger = get_logger(__name__)

CONFIG_ENV_VAR = "PIMSIM_DPU_CONFIG"


class DpuConfig(BaseModel):
    """Capacity constants and cost parameters of the modelled PIM system."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    mram_bytes: int = Field(64 * 2**20, gt=0, description="Per-DPU DRAM bank (MRAM).")
    wram_bytes: int = Field(64 * 2**10, gt=0, description="Per-DPU scratchpad (WRAM).")
    iram_bytes: int = Field(24 * 2**10, gt=0, description="Per-DPU instruction memory (IRAM).")
    max_dpus: int = Field(2560, gt=0, description="DPUs available in the system.")
    bytes_per_amplitude: int = Field(16, gt=0, description="Bytes per stored amplitude.")
    int_op_cost: float = Field(1.0, gt=0, description="Model units per native integer kernel op.")
    float_emu_cost: float = Field(32.0, gt=0, description="Model units per emulated float op.")
    c2d_bytes_per_unit: float = Field(64.0, gt=0, description="Host-to-DPU bytes per model unit.")
    d2c_bytes_per_unit: float = Field(64.0, gt=0, description="DPU-to-host bytes per model unit.")
    recon_op_cost: float = Field(1.0, gt=0, description="Model units per host reconstruction product.")
    dma_bytes_per_unit: float = Field(64.0, gt=0, description="MRAM<->WRAM DMA bytes per model unit.")
    parallelism: int = Field(1, gt=0, description="Worker threads running DPU programs.")
    return_probabilities: bool = Field(False, description="D-to-C carries probabilities only (half the bytes).")
    host_budget_bytes: int = Field(2**30, gt=0, description="Host-side state budget for analysis and oracle.")

    @model_validator(mode="after")
    def _float_costs_more(self) -> DpuConfig:
        if self.float_emu_cost <= self.int_op_cost:
            raise ValueError("float_emu_cost must exceed int_op_cost")
        return self


def state_bytes(n_qubits: int, cfg: DpuConfig | None = None) -> int:
    """State-vector bytes of an n-qubit component: 2^n amplitudes (2^(n+4) at 16 B each)."""
    per_amplitude = cfg.bytes_per_amplitude if cfg is not None else 16
    return (2**n_qubits) * per_amplitude


def _read_config_file(path: Path) -> dict[str, Any]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DpuConfigError(f"cannot read DPU config {path}: {e}") from e
    try:
        data = yaml.safe_load(text) if path.suffix.lower() in (".yaml", ".yml") else json.loads(text)
    except (yaml.YAMLError, json.JSONDecodeError) as e:
        raise DpuConfigError(f"cannot parse DPU config {path}: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise DpuConfigError(f"DPU config {path} must hold a mapping")
    return data


def parse_overrides(pairs: list[str] | tuple[str, ...]) -> dict[str, str]:
    """KEY=VALUE strings to a dict; values stay strings for pydantic to coerce."""
    out: dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise DpuConfigError(f"override {pair!r} is not KEY=VALUE")
        out[key.strip()] = value.strip()
    return out


def load_dpu_config(
    path: Path | None = None,
    overrides: Mapping[str, Any] | None = None,
    environ: Mapping[str, str] | None = None,
) -> DpuConfig:
    """
    Build a DpuConfig from defaults, PIMSIM_DPU_CONFIG, an explicit file and overrides.

    Raises:
        DpuConfigError: unreadable file, unknown key or invalid value
    """
    env = os.environ if environ is None else environ
    values: dict[str, Any] = {}
    env_path = env.get(CONFIG_ENV_VAR)
    if env_path:
        logger.debug("loading DPU config from %s=%s", CONFIG_ENV_VAR, env_path)
        values.update(_read_config_file(Path(env_path)))
    if path is not None:
        logger.debug("loading DPU config from %s", path)
        values.update(_read_config_file(path))
    values.update(overrides or {})
    try:
        return DpuConfig.model_validate(values)
    except ValidationError as e:
        raise DpuConfigError(str(e)) from e

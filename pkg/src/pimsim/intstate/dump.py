# src/pimsim/intstate/dump.py

"""
State dump format shared by `verify --golden` and golden tests.

    {"n_qubits": 2, "nums": [[1, 0], [1, 0], [0, 0], [0, 0]], "s": 1, "k": 0,
     "probabilities": ["1/2", "1/2", "0", "0"]}
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from pydantic import BaseModel, Field, model_validator

from .state import QState, probabilities


class StateDump(BaseModel):
    """Exact integer state: numerators as [re, im] pairs plus the s and k exponents."""

    n_qubits: int = Field(..., ge=1, description="Number of qubits.")
    nums: list[tuple[int, int]] = Field(..., description="Numerators as [re, im], index = basis state, qubit 0 = bit 0.")
    s: int = Field(..., ge=0, description="Half-shift: denominator (sqrt 2)^s.")
    k: int = Field(..., ge=0, description="Quantization scale: denominator 2^k.")
    probabilities: list[str] | None = Field(None, description="Exact probabilities as 'p/q' strings.")

    @model_validator(mode="after")
    def _length_matches(self) -> StateDump:
        if len(self.nums) != 2**self.n_qubits:
            raise ValueError(f"expected {2 ** self.n_qubits} numerators, got {len(self.nums)}")
        return self


def dump_state(state: QState, with_probabilities: bool = True) -> StateDump:
    nums = list(zip(state.re.tolist(), state.im.tolist()))
    probs = [str(p) for p in probabilities(state)] if with_probabilities else None
    return StateDump(n_qubits=state.n_qubits, nums=nums, s=state.half_shift, k=state.scale_k, probabilities=probs)


def load_state_dump(dump: StateDump) -> QState:
    re = np.array([r for r, _ in dump.nums], dtype=np.int64)
    im = np.array([i for _, i in dump.nums], dtype=np.int64)
    return QState(dump.n_qubits, re, im, dump.s, dump.k)


def write_state_dump(state: QState, path: Path) -> None:
    path.write_text(dump_state(state).model_dump_json(indent=2) + "\n", encoding="utf-8")


def read_state_dump(path: Path) -> QState:
    return load_state_dump(StateDump.model_validate(json.loads(path.read_text(encoding="utf-8"))))

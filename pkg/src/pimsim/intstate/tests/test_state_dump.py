"""
Tests for the state dump format.
"""

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from pimsim.circuit import gen_benchmark
from pimsim.intstate import StateDump, dump_state, read_state_dump, run_program, states_equal, write_state_dump
from pimsim.passes import merge_gates


def test_dump_of_plus_state() -> None:
    state, _ = run_program(merge_gates(gen_benchmark("QRNG", 2)))
    dump = dump_state(state)
    assert dump.n_qubits == 2
    assert dump.s == 2
    assert dump.nums == [(1, 0)] * 4
    assert dump.probabilities == ["1/4"] * 4


def test_write_then_read(tmp_path: Path) -> None:
    state, _ = run_program(merge_gates(gen_benchmark("BV", 4)))
    path = tmp_path / "bv4.json"
    write_state_dump(state, path)
    loaded = read_state_dump(path)
    assert states_equal(state, loaded)
    assert json.loads(path.read_text())["k"] == state.scale_k


def test_dump_length_is_checked() -> None:
    with pytest.raises(ValidationError):
        StateDump(n_qubits=2, nums=[(1, 0)], s=0, k=0)
    with pytest.raises(ValidationError):
        StateDump(n_qubits=1, nums=[(1, 0), (0, 0)], s=-1, k=0)

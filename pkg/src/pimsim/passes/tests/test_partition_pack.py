"""
Tests for vector partitioning and DPU packing.
"""

import pytest

from pimsim.circuit import gen_benchmark
from pimsim.data import GateOp
from pimsim.errors import CapacityError
from pimsim.passes import interaction_graph, pack, partition, whole_plan
from pimsim.pim_exec import DpuConfig


@pytest.mark.parametrize("family", ["QRNG", "BB"])
def test_separable_circuits_split_per_qubit(family: str) -> None:
    plan = partition(gen_benchmark(family, 16))
    assert len(plan.components) == 16
    assert [c.qubits for c in plan.components] == [(q,) for q in range(16)]
    packed = pack(plan, 4)
    assert packed.is_assigned
    assert packed.assignment == {i: i % 4 for i in range(16)}
    assert all(len(packed.components_on(d)) == 4 for d in range(4))


def test_entangled_circuit_is_one_component() -> None:
    plan = partition(gen_benchmark("BV", 6))
    assert [c.qubits for c in plan.components] == [tuple(range(6))]


def test_hidden_shift_pairs_and_local_indices() -> None:
    plan = partition(gen_benchmark("HS", 4))
    assert [c.qubits for c in plan.components] == [(0, 2), (1, 3)]
    first = plan.components[0].circuit
    assert first.n_qubits == 2
    assert GateOp.of("CNOT", 0, 1) in first.ops
    assert sum(len(c.circuit.ops) for c in plan.components) == 16


def test_interaction_graph_has_every_qubit() -> None:
    graph = interaction_graph(gen_benchmark("XOR", 5))
    assert sorted(graph.nodes) == list(range(5))
    assert graph.number_of_edges() == 4


def test_component_above_mram_is_rejected() -> None:
    plan = whole_plan(gen_benchmark("XOR", 23))
    with pytest.raises(CapacityError, match="exceeds MRAM"):
        pack(plan, 1)


def test_running_out_of_dpus() -> None:
    plan = partition(gen_benchmark("QRNG", 4))
    with pytest.raises(CapacityError, match="insufficient DPUs"):
        pack(plan, 1, DpuConfig(mram_bytes=64))
    with pytest.raises(CapacityError):
        pack(plan, 3000)
    with pytest.raises(ValueError):
        pack(plan, 0)

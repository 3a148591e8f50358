# src/pimsim/passes/partition.py

"""
Vector partitioning: split a circuit into independent qubit components.

Components are the connected components of the qubit interaction graph
(an edge for every operand pair of a multi-qubit gate). Each component's
sub-circuit uses local indices: local qubit i is global qubit qubits[i].
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from pimsim.circuit import require_valid
from pimsim.data import CircuitIR, CircuitMetadata, Component, PartitionPlan
from pimsim.utils.logger import get_logger

logger = get_logger(__name__)


def interaction_graph(circuit: CircuitIR) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(circuit.n_qubits))
    for op in circuit.ops:
        if len(op.qubits) > 1:
            graph.add_edges_from(combinations(op.qubits, 2))
    return graph


def _component(circuit: CircuitIR, qubits: tuple[int, ...]) -> Component:
    local = {q: i for i, q in enumerate(qubits)}
    members = set(qubits)
    ops = tuple(op.remap(local) for op in circuit.ops if op.qubits[0] in members)
    label = ",".join(f"q{q}" for q in qubits)
    metadata = CircuitMetadata(
        name=f"{circuit.metadata.name}[{label}]" if circuit.metadata.name else f"[{label}]",
        params=dict(circuit.metadata.params),
        measured=circuit.metadata.measured,
    )
    return Component(qubits, CircuitIR(len(qubits), ops, metadata))


def partition(circuit: CircuitIR) -> PartitionPlan:
    """Unassigned plan with one component per connected qubit group, ordered by lowest qubit."""
    require_valid(circuit)
    groups = sorted((tuple(sorted(c)) for c in nx.connected_components(interaction_graph(circuit))), key=lambda g: g[0])
    components = tuple(_component(circuit, g) for g in groups)
    logger.debug("partitioned %d qubits into %d component(s)", circuit.n_qubits, len(components))
    return PartitionPlan(circuit.n_qubits, components)


def whole_plan(circuit: CircuitIR) -> PartitionPlan:
    """Single-component plan covering every qubit (no partitioning)."""
    require_valid(circuit)
    return PartitionPlan(circuit.n_qubits, (Component(tuple(range(circuit.n_qubits)), circuit),))

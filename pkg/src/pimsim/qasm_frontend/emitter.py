# src/pimsim/qasm_frontend/emitter.py

from __future__ import annotations

import json
from fractions import Fraction

from pimsim.circuit import require_valid
from pimsim.data import CircuitIR, GateName, GateOp

from .parser import META_PREFIX, QASM_GATES

_NAMES: dict[GateName, str] = {gate: name for name, gate in QASM_GATES.items() if name.islower()}

_ANGLES: dict[Fraction, str] = {
    Fraction(1, 2): "pi/2",
    Fraction(-1, 2): "-pi/2",
    Fraction(3, 2): "3*pi/2",
    Fraction(-3, 2): "-3*pi/2",
    Fraction(1): "pi",
}


def emit_op(op: GateOp, register: str = "q") -> str:
    """One gate statement, e.g. `cx q[0],q[1];` or `rx(pi/2) q[0];`."""
    head = _NAMES[op.kind.name]
    if op.kind.angle is not None:
        head += f"({_ANGLES[op.kind.angle]})"
    return f"{head} " + ",".join(f"{register}[{q}]" for q in op.qubits) + ";"


def emit(circuit: CircuitIR) -> str:
    """
    OpenQASM 2.0 text for a valid circuit; parse(emit(c)) is structurally c.

    The circuit name and params travel in a `// pimsim-meta:` comment; a
    measured circuit gets a classical register and one terminal whole-register
    measure.

    Raises:
        CircuitValidationError: the circuit does not validate
    """
    require_valid(circuit)
    n = circuit.n_qubits
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";']
    meta = circuit.metadata
    if meta.name or meta.params:
        payload = json.dumps({"name": meta.name, "params": dict(meta.params)}, sort_keys=True, default=str)
        lines.append(f"{META_PREFIX} {payload}")
    lines.append(f"qreg q[{n}];")
    if meta.measured:
        lines.append(f"creg c[{n}];")
    lines.extend(emit_op(op) for op in circuit.ops)
    if meta.measured:
        lines.append("measure q -> c;")
    return "\n".join(lines) + "\n"

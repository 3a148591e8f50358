# src/pimsim/qasm_frontend/parser.py

"""
OpenQASM 2.0 subset reader.

Accepted: the `OPENQASM 2.0;` header, includes (ignored), one `qreg`, any number
of `creg`s, catalog gate statements and terminal `measure` statements. A
`// pimsim-meta: {...}` comment line restores the circuit name and params.

parse() is total: any input, including undecodable bytes, yields either a
CircuitIR or a non-empty list of diagnostics. It never returns a partial circuit.

Usage:
    result = parse(Path("bell.qasm").read_text())
    if isinstance(result, CircuitIR):
        ...
    else:
        for diagnostic in result:
            print(diagnostic)
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterator

import pyparsing as pp

from pimsim.data import ANGLE_DOMAIN, CircuitIR, CircuitMetadata, GateKind, GateName, GateOp
from pimsim.utils.logger import get_logger

from .diagnostics import ParseDiagnostic, Severity, SourceSpan
from .grammar import (
    ANGLE,
    STATEMENT,
    AngleText,
    Barrier,
    GateCall,
    Header,
    Include,
    Located,
    Measure,
    QubitRef,
    RegisterDecl,
)

logger = get_logger(__name__)

META_PREFIX = "// pimsim-meta:"
ANGLE_TOLERANCE = 1e-9
OUT_OF_DOMAIN = "angle outside supported domain"

QASM_GATES: dict[str, GateName] = {
    "h": GateName.H,
    "x": GateName.X,
    "y": GateName.Y,
    "z": GateName.Z,
    "s": GateName.S,
    "sdg": GateName.Sdg,
    "t": GateName.T,
    "tdg": GateName.Tdg,
    "rx": GateName.RX,
    "ry": GateName.RY,
    "rz": GateName.RZ,
    "cx": GateName.CNOT,
    "CX": GateName.CNOT,
    "cz": GateName.CZ,
    "swap": GateName.SWAP,
    "ccx": GateName.CCX,
}


def strip_comments(text: str) -> str:
    """Blank out `//` comments, keeping every other character at its offset."""
    out: list[str] = []
    for line in text.splitlines(keepends=True):
        cut = line.find("//")
        if cut < 0:
            out.append(line)
            continue
        body = line.rstrip("\r\n")
        out.append(line[:cut] + " " * (len(body) - cut) + line[len(body) :])
    return "".join(out)


def split_statements(clean: str) -> Iterator[tuple[int, str, bool]]:
    """(start offset, statement text, terminated by ';') for each statement."""
    start = 0
    while start < len(clean):
        end = clean.find(";", start)
        if end < 0:
            yield start, clean[start:], False
            return
        yield start, clean[start:end], True
        start = end + 1


def angle_value(text: str) -> tuple[Fraction | None, str | None]:
    """Angle in units of pi, or the reason it is not acceptable."""
    try:
        result = ANGLE.parse_string(text.strip(), parse_all=True)
        sign = -1 if "neg" in result else 1
        if "pi" in result:
            coef = Fraction(result["coef"]) if "coef" in result else Fraction(1)
            div = Fraction(result["div"]) if "div" in result else Fraction(1)
            if div == 0:
                return None, "malformed angle expression"
            value = sign * coef / div
            return (value, None) if value in ANGLE_DOMAIN else (None, OUT_OF_DOMAIN)
        literal = sign * float(result["value"])
    except (pp.ParseBaseException, ValueError, OverflowError):
        return None, "malformed angle expression"
    for candidate in ANGLE_DOMAIN:
        if abs(literal - float(candidate) * math.pi) <= ANGLE_TOLERANCE:
            return candidate, None
    return None, OUT_OF_DOMAIN


class _Reader:
    """Walks the statements of one source, collecting ops and diagnostics."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.diagnostics: list[ParseDiagnostic] = []
        self.qreg: str | None = None
        self.n_qubits = 0
        self.registers: dict[str, int] = {}
        self.cregs: set[str] = set()
        self.ops: list[GateOp] = []
        self.measured = False
        self.metadata = CircuitMetadata()

    def report(self, offset: int, length: int, message: str, severity: Severity = "error") -> None:
        self.diagnostics.append(ParseDiagnostic(SourceSpan.at(self.text, offset, length), message, severity))

    def report_at(self, base: int, node: Located, message: str, severity: Severity = "error") -> None:
        self.report(base + node.start, node.length, message, severity)

    @property
    def failed(self) -> bool:
        return any(d.is_error for d in self.diagnostics)

    def read(self) -> CircuitIR | None:
        self._read_metadata()
        clean = strip_comments(self.text)
        for start, body, terminated in split_statements(clean):
            if not body.strip():
                continue
            lead = start + len(body) - len(body.lstrip())
            if not terminated:
                self.report(lead, len(body.strip()), "missing ';' at end of statement")
                continue
            self._statement(start, body)
        if self.qreg is None:
            self.report(0, 1, "no quantum register declared")
        if self.failed:
            return None
        return CircuitIR(
            self.n_qubits,
            tuple(self.ops),
            CircuitMetadata(self.metadata.name, self.metadata.params, self.measured),
        )

    def _read_metadata(self) -> None:
        offset = 0
        for line in self.text.splitlines(keepends=True):
            stripped = line.strip()
            if stripped.startswith(META_PREFIX):
                try:
                    meta = json.loads(stripped[len(META_PREFIX) :])
                    self.metadata = CircuitMetadata(str(meta.get("name", "")), dict(meta.get("params", {})))
                except (ValueError, AttributeError, TypeError):
                    self.report(offset + line.find("//"), len(stripped), "unreadable pimsim-meta comment", "warning")
            offset += len(line)

    def _statement(self, start: int, body: str) -> None:
        try:
            node = STATEMENT.parse_string(body, parse_all=True)[0]
        except pp.ParseBaseException as exc:
            self.report(start + exc.loc, 1, f"malformed statement: {exc.msg}")
            return
        except ValueError:
            self.report(start + len(body) - len(body.lstrip()), len(body.strip()), "malformed statement")
            return

        if isinstance(node, Header):
            if node.version not in ("2", "2.0"):
                self.report(start + len(body) - len(body.lstrip()), len(body.strip()), "unsupported OpenQASM version")
        elif isinstance(node, Include):
            logger.debug("ignoring include %r", node.file)
        elif isinstance(node, RegisterDecl):
            self._register(start, node)
        elif isinstance(node, Measure):
            self._measure(start, node)
        elif isinstance(node, Barrier):
            self.report(start + len(body) - len(body.lstrip()), len(body.strip()), "barrier ignored", "warning")
        elif isinstance(node, GateCall):
            self._gate(start, node)

    def _register(self, base: int, decl: RegisterDecl) -> None:
        name = decl.name.text
        if name in self.registers:
            self.report_at(base, decl.name, f"register '{name}' redefined")
        elif decl.size < 1:
            self.report_at(base, decl.name, "register size must be positive")
        elif decl.kind == "qreg" and self.qreg is not None:
            self.report_at(base, decl.name, "only one quantum register is supported")
        else:
            self.registers[name] = decl.size
            if decl.kind == "qreg":
                self.qreg, self.n_qubits = name, decl.size
            else:
                self.cregs.add(name)

    def _index(self, base: int, ref: QubitRef, register: str | None, what: str) -> int | None:
        """Resolved index, -1 for a whole-register reference, None after reporting a problem."""
        if register is None or ref.register != register:
            self.report_at(base, ref, f"unknown {what} register '{ref.register}'")
            return None
        if ref.index is None:
            return -1
        if ref.index >= self.registers[register]:
            self.report_at(base, ref, f"index {ref.index} out of range for {register}[{self.registers[register]}]")
            return None
        return ref.index

    def _measure(self, base: int, node: Measure) -> None:
        source = self._index(base, node.source, self.qreg, "quantum")
        creg = node.target.register if node.target.register in self.cregs else None
        target = self._index(base, node.target, creg, "classical")
        if source is not None and target is not None and (source < 0) != (target < 0):
            self.report_at(base, node.source, "measure must pair a register with a register or a bit with a bit")
        self.measured = True

    def _gate(self, base: int, call: GateCall) -> None:
        gate = QASM_GATES.get(call.name.text)
        if gate is None:
            self.report_at(base, call.name, f"unknown gate '{call.name.text}'")
            return
        if self.measured:
            self.report_at(base, call.name, "gate after measure; only terminal measurement is supported")
            return
        angle = self._angle(base, gate, call)
        if gate.is_rotation and angle is None:
            return
        if self.qreg is None:
            self.report_at(base, call.name, "no quantum register declared")
            return

        indices = [self._index(base, ref, self.qreg, "quantum") for ref in call.args]
        if any(i is None for i in indices):
            return
        if len(indices) != gate.arity:
            self.report_at(base, call.name, f"gate '{call.name.text}' expects {gate.arity} operand(s), got {len(indices)}")
            return
        if -1 in indices:
            if gate.arity != 1:
                self.report_at(base, call.name, "register broadcast is only supported for single-qubit gates")
                return
            self.ops.extend(GateOp(GateKind(gate, angle), (q,)) for q in range(self.n_qubits))
            return
        if len(set(indices)) != len(indices):
            self.report_at(base, call.name, "duplicate operand")
            return
        self.ops.append(GateOp(GateKind(gate, angle), tuple(i for i in indices if i is not None)))

    def _angle(self, base: int, gate: GateName, call: GateCall) -> Fraction | None:
        if call.angle is None:
            if gate.is_rotation:
                self.report_at(base, call.name, "rotation gate missing angle")
            return None
        if not gate.is_rotation:
            self.report_at(base, call.angle, "angle given for non-rotation gate")
            return None
        value, problem = angle_value(call.angle.text)
        if problem:
            self.report_at(base, _trimmed(call.angle), problem)
        return value


def _trimmed(angle: AngleText) -> AngleText:
    lead = len(angle.text) - len(angle.text.lstrip())
    return AngleText(angle.start + lead, angle.start + lead + max(len(angle.text.strip()), 1), angle.text.strip())


def parse_with_diagnostics(text: str | bytes) -> tuple[CircuitIR | None, list[ParseDiagnostic]]:
    """Circuit (None on any error) plus every diagnostic, warnings included."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            shown = text.decode("utf-8", errors="replace")
            span = SourceSpan.at(shown, exc.start)
            return None, [ParseDiagnostic(span, "input is not valid UTF-8")]
    reader = _Reader(text)
    circuit = reader.read()
    for diagnostic in reader.diagnostics:
        if not diagnostic.is_error:
            logger.warning("%s", diagnostic)
    return circuit, reader.diagnostics


def parse(text: str | bytes) -> CircuitIR | list[ParseDiagnostic]:
    """CircuitIR on success, else the diagnostics (errors and warnings, in source order)."""
    circuit, diagnostics = parse_with_diagnostics(text)
    if circuit is None:
        return sorted(diagnostics, key=lambda d: d.span.offset)
    return circuit

"""
Tests for the OpenQASM 2.0 subset parser and its diagnostics.
"""

from fractions import Fraction

import pytest

from pimsim.data import CircuitIR, GateOp
from pimsim.qasm_frontend import ParseDiagnostic, angle_value, parse, parse_with_diagnostics

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


def _errors(text: str) -> list[ParseDiagnostic]:
    result = parse(text)
    assert isinstance(result, list), f"expected diagnostics, got {result}"
    return [d for d in result if d.is_error]


def test_bell_prep() -> None:
    """The minimal Bell-prep source gives [H q0, CNOT q0 q1]."""
    result = parse("OPENQASM 2.0; qreg q[2]; h q[0]; cx q[0],q[1];")
    assert isinstance(result, CircuitIR)
    assert result.n_qubits == 2
    assert result.ops == (GateOp.of("H", 0), GateOp.of("CNOT", 0, 1))
    assert not result.metadata.measured


def test_every_catalog_gate_and_terminal_measure() -> None:
    text = HEADER + (
        "qreg q[3];\ncreg c[3];\n"
        "h q[0]; x q[1]; y q[2]; z q[0]; s q[1]; sdg q[2]; t q[0]; tdg q[1];\n"
        "rx(pi/2) q[0]; ry(-pi/2) q[1]; rz(3*pi/2) q[2]; rx(-3*pi/2) q[0]; ry(pi) q[1];\n"
        "cx q[0],q[1]; cz q[1],q[2]; swap q[0],q[2]; ccx q[0],q[1],q[2];\n"
        "measure q[0] -> c[0];\nmeasure q[1] -> c[1];\n"
    )
    result = parse(text)
    assert isinstance(result, CircuitIR)
    assert len(result.ops) == 17
    assert result.ops[8] == GateOp.of("RX", 0, angle=Fraction(1, 2))
    assert result.ops[10] == GateOp.of("RZ", 2, angle=Fraction(3, 2))
    assert result.ops[16] == GateOp.of("CCX", 0, 1, 2)
    assert result.metadata.measured


def test_comments_and_broadcast() -> None:
    result = parse(HEADER + "// prep\nqreg q[3]; // three\nh q; // all of them\n")
    assert isinstance(result, CircuitIR)
    assert result.ops == tuple(GateOp.of("H", q) for q in range(3))


@pytest.mark.parametrize(
    "literal, expected",
    [
        ("pi/2", Fraction(1, 2)),
        ("-pi/2", Fraction(-1, 2)),
        ("3*pi/2", Fraction(3, 2)),
        ("-3*pi/2", Fraction(-3, 2)),
        ("pi", Fraction(1)),
        ("1.5707963267948966", Fraction(1, 2)),
        ("-4.71238898038469", Fraction(-3, 2)),
        (" 3.141592653589793 ", Fraction(1)),
    ],
)
def test_accepted_angles(literal: str, expected: Fraction) -> None:
    assert angle_value(literal) == (expected, None)


@pytest.mark.parametrize("literal", ["pi/3", "-pi", "2*pi", "0", "1.5707", "pi/4"])
def test_out_of_domain_angles(literal: str) -> None:
    assert angle_value(literal) == (None, "angle outside supported domain")


@pytest.mark.parametrize("literal", ["pi/0", "half", "pi//2", "--pi"])
def test_malformed_angles(literal: str) -> None:
    value, problem = angle_value(literal)
    assert value is None
    assert problem == "malformed angle expression"


def test_angle_diagnostic_points_at_angle() -> None:
    text = "OPENQASM 2.0; qreg q[1]; rx(pi/3) q[0];"
    errors = _errors(text)
    assert [d.message for d in errors] == ["angle outside supported domain"]
    span = errors[0].span
    assert text[span.offset : span.offset + span.length] == "pi/3"
    assert (span.line, span.column) == (1, text.index("pi/3") + 1)


@pytest.mark.parametrize(
    "body, message",
    [
        ("qreg q[2]; foo q[0];", "unknown gate 'foo'"),
        ("qreg q[2]; qreg q[3];", "register 'q' redefined"),
        ("qreg q[2]; qreg r[3];", "only one quantum register is supported"),
        ("qreg q[2]; h q[2];", "index 2 out of range for q[2]"),
        ("qreg q[2]; h r[0];", "unknown quantum register 'r'"),
        ("qreg q[2]; cx q[0];", "gate 'cx' expects 2 operand(s), got 1"),
        ("qreg q[2]; cx q[1],q[1];", "duplicate operand"),
        ("qreg q[2]; rx q[0];", "rotation gate missing angle"),
        ("qreg q[2]; h(pi) q[0];", "angle given for non-rotation gate"),
        ("qreg q[2]; creg c[2]; measure q[0] -> c[0]; h q[1];", "gate after measure; only terminal measurement is supported"),
        ("qreg q[0];", "register size must be positive"),
        ("h q[0];", "no quantum register declared"),
        ("qreg q[2]; h q[0]", "missing ';' at end of statement"),
    ],
)
def test_error_diagnostics(body: str, message: str) -> None:
    errors = _errors("OPENQASM 2.0;\n" + body)
    assert message in [d.message for d in errors]


def test_malformed_statement() -> None:
    errors = _errors("OPENQASM 2.0; qreg q[2]; h q[0;")
    assert errors[0].message.startswith("malformed statement")
    assert errors[0].span.line == 1


def test_unsupported_version() -> None:
    assert "unsupported OpenQASM version" in [d.message for d in _errors("OPENQASM 3.0; qreg q[1];")]


def test_barrier_is_a_warning() -> None:
    circuit, diagnostics = parse_with_diagnostics("OPENQASM 2.0; qreg q[2]; h q[0]; barrier q[0],q[1]; h q[1];")
    assert circuit is not None
    assert len(circuit.ops) == 2
    assert [(d.severity, d.message) for d in diagnostics] == [("warning", "barrier ignored")]


def test_no_partial_circuit_on_error() -> None:
    circuit, diagnostics = parse_with_diagnostics("OPENQASM 2.0; qreg q[2]; h q[0]; bogus q[1]; h q[1];")
    assert circuit is None
    assert len(diagnostics) == 1


def test_diagnostics_use_line_and_column() -> None:
    text = "OPENQASM 2.0;\nqreg q[2];\n\th q[5];\n"
    (error,) = _errors(text)
    assert error.span.line == 3
    assert error.span.column == 4
    assert text[error.span.offset : error.span.offset + error.span.length] == "q[5]"


def test_metadata_comment_restores_name_and_params() -> None:
    text = HEADER + '// pimsim-meta: {"name": "BV_4", "params": {"secret": "111"}}\nqreg q[4];\n'
    result = parse(text)
    assert isinstance(result, CircuitIR)
    assert result.metadata.name == "BV_4"
    assert result.metadata.params["secret"] == "111"


def test_invalid_utf8_bytes() -> None:
    result = parse(b"OPENQASM 2.0; qreg q[1]; \xff\xfe")
    assert isinstance(result, list)
    assert result[0].message == "input is not valid UTF-8"

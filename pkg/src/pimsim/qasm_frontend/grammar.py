# src/pimsim/qasm_frontend/grammar.py

"""
pyparsing grammar for one OpenQASM 2.0 statement (text between two ';').

Every parse action turns its tokens into a small located record, so the
parser can attach diagnostics to exact source offsets. Offsets are relative
to the statement text; the parser adds the statement start.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import pyparsing as pp


@dataclass(frozen=True)
class Located:
    start: int
    end: int

    @property
    def length(self) -> int:
        return max(self.end - self.start, 1)


@dataclass(frozen=True)
class Name(Located):
    text: str


@dataclass(frozen=True)
class QubitRef(Located):
    register: str
    index: int | None


@dataclass(frozen=True)
class AngleText(Located):
    text: str


@dataclass(frozen=True)
class Header:
    version: str


@dataclass(frozen=True)
class Include:
    file: str


@dataclass(frozen=True)
class RegisterDecl:
    kind: str  # "qreg" | "creg"
    name: Name
    size: int


@dataclass(frozen=True)
class Measure:
    source: QubitRef
    target: QubitRef


@dataclass(frozen=True)
class Barrier:
    args: tuple[QubitRef, ...]


@dataclass(frozen=True)
class GateCall:
    name: Name
    angle: AngleText | None
    args: tuple[QubitRef, ...]


Statement = Header | Include | RegisterDecl | Measure | Barrier | GateCall


def _located(expr: pp.ParserElement, build: Callable[[pp.ParseResults, int, int], object]) -> pp.ParserElement:
    located = pp.Located(expr).set_parse_action(lambda t: build(t["value"], t["locn_start"], t["locn_end"]))
    # results names go on the wrapper; a named Located nests its tokens one level deeper
    return pp.And([located])


def _record(r: pp.ParseResults, key: str) -> Any:
    """The record under a results name; a named wrapper keeps it one level down."""
    value = r[key]
    return value[0] if isinstance(value, pp.ParseResults) else value


class CommonTokens:
    lbra = pp.Suppress("[")
    rbra = pp.Suppress("]")
    lpar = pp.Suppress("(")
    rpar = pp.Suppress(")")
    ident = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    natural = pp.Word(pp.nums)


def _qubit_ref() -> pp.ParserElement:
    t = CommonTokens
    ref = t.ident("register") + pp.Optional(t.lbra + t.natural("index") + t.rbra)
    return _located(
        ref,
        lambda v, s, e: QubitRef(s, e, v["register"], int(v["index"]) if "index" in v else None),
    )


def _statement() -> pp.ParserElement:
    t = CommonTokens
    qubit = _qubit_ref()
    qubit_list = pp.Group(pp.DelimitedList(qubit))("args")
    name = _located(t.ident("text"), lambda v, s, e: Name(s, e, v["text"]))

    header = (pp.Keyword("OPENQASM") + pp.Word(pp.nums + ".")("version")).set_parse_action(
        lambda r: Header(r["version"])
    )
    include = (pp.Keyword("include") + pp.QuotedString('"')("file")).set_parse_action(lambda r: Include(r["file"]))
    register = ((pp.Keyword("qreg") | pp.Keyword("creg"))("kind") + name("name") + t.lbra + t.natural("size") + t.rbra)
    register.set_parse_action(lambda r: RegisterDecl(r["kind"], _record(r, "name"), int(r["size"])))
    measure = (pp.Keyword("measure") + qubit("source") + pp.Suppress("->") + qubit("target")).set_parse_action(
        lambda r: Measure(_record(r, "source"), _record(r, "target"))
    )
    barrier = (pp.Keyword("barrier") + qubit_list).set_parse_action(lambda r: Barrier(tuple(r["args"])))

    angle = _located(pp.CharsNotIn("()")("text"), lambda v, s, e: AngleText(s, e, v["text"]))
    gate = (name("name") + pp.Optional(t.lpar + angle("angle") + t.rpar) + qubit_list).set_parse_action(
        lambda r: GateCall(_record(r, "name"), _record(r, "angle") if "angle" in r else None, tuple(r["args"]))
    )

    statement = header | include | register | measure | barrier | gate
    # offsets must match the caller's text, so tabs are not expanded
    return statement.parse_with_tabs()


STATEMENT = _statement()


# Angle expressions: [-][c*]pi[/d] or a decimal literal, c and d decimal numbers
_NUMBER = pp.Regex(r"(\d+(\.\d*)?|\.\d+)([eE][-+]?\d{1,3})?")
_PI_TERM = pp.Optional(_NUMBER("coef") + pp.Suppress("*")) + pp.Keyword("pi")("pi") + pp.Optional(
    pp.Suppress("/") + _NUMBER("div")
)
ANGLE = (pp.Optional(pp.Literal("-")("neg")) + (_PI_TERM | _NUMBER("value"))).parse_with_tabs()

# src/pimsim/qasm_frontend/diagnostics.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import pyparsing as pp

Severity = Literal["error", "warning"]


@dataclass(frozen=True)
class SourceSpan:
    """1-based line/column plus the absolute character offset into the source."""

    line: int
    column: int
    length: int
    offset: int

    @classmethod
    def at(cls, text: str, offset: int, length: int = 1) -> SourceSpan:
        offset = max(0, min(offset, max(len(text) - 1, 0)))
        length = max(1, min(length, len(text) - offset)) if text else 1
        return cls(pp.lineno(offset, text), pp.col(offset, text), length, offset)


@dataclass(frozen=True)
class ParseDiagnostic:
    span: SourceSpan
    message: str
    severity: Severity = "error"

    def __post_init__(self) -> None:
        if not self.message:
            raise ValueError("diagnostic message must be non-empty")

    @property
    def is_error(self) -> bool:
        return self.severity == "error"

    def __str__(self) -> str:
        return f"{self.span.line}:{self.span.column}: {self.severity}: {self.message}"

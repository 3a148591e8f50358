# src/pimsim/circuit/benchmarks.py

"""
Generators for the six benchmark circuit families.

Each family fixes its gate counts; the structure below is one realisation of
those counts:

    BB_n    BB84 preparation          2n 1Q,      0 2Q
    BV_n    Bernstein-Vazirani        2n 1Q,    n-1 2Q   (default secret and width)
    EDC_n   bit-flip encode/decode    2n 1Q,   2n-2 2Q
    HS_n    hidden shift, n even      3n 1Q,      n 2Q
    QRNG_n  random number generator    n 1Q,      0 2Q
    XOR_n   CNOT parity chain          0 1Q,    n-1 2Q

Usage:
    from pimsim.circuit import gen_benchmark

    bv = gen_benchmark("BV", 4, {"secret": "111", "final_layer_width": 4})
    bb = gen_benchmark("bb", 8, seed=7)
"""

from __future__ import annotations

from enum import Enum
from typing import Any, Callable, Mapping

import numpy as np

from pimsim.data import CircuitIR, CircuitMetadata, GateOp
from pimsim.errors import BenchmarkError
from pimsim.utils.logger import get_logger

logger = get_logger(__name__)


class BenchmarkFamily(str, Enum):
    BB = "BB"
    BV = "BV"
    EDC = "EDC"
    HS = "HS"
    QRNG = "QRNG"
    XOR = "XOR"

    @classmethod
    def parse(cls, value: str | BenchmarkFamily) -> BenchmarkFamily:
        if isinstance(value, BenchmarkFamily):
            return value
        try:
            return cls(value.upper())
        except ValueError:
            known = ", ".join(f.value for f in cls)
            raise BenchmarkError(f"unknown benchmark family {value!r} (known: {known})") from None


def expected_counts(family: str | BenchmarkFamily, n: int) -> tuple[int, int]:
    """(1Q, multi-qubit) counts the family must produce at size n with default params."""
    fam = BenchmarkFamily.parse(family)
    return {
        BenchmarkFamily.BB: (2 * n, 0),
        BenchmarkFamily.BV: (2 * n, n - 1),
        BenchmarkFamily.EDC: (2 * n, 2 * n - 2),
        BenchmarkFamily.HS: (3 * n, n),
        BenchmarkFamily.QRNG: (n, 0),
        BenchmarkFamily.XOR: (0, n - 1),
    }[fam]


def _bitstring(value: Any, length: int, what: str) -> str:
    text = str(value)
    if len(text) != length or any(ch not in "01" for ch in text):
        raise BenchmarkError(f"{what} must be a 0/1 string of length {length}, got {text!r}")
    return text


def _check_keys(params: Mapping[str, Any], allowed: set[str], family: BenchmarkFamily) -> None:
    unknown = set(params) - allowed
    if unknown:
        raise BenchmarkError(f"unknown parameter(s) for {family.value}: {', '.join(sorted(unknown))}")


def _bb(n: int, params: Mapping[str, Any], seed: int) -> tuple[list[GateOp], dict[str, Any]]:
    _check_keys(params, {"bits", "bases"}, BenchmarkFamily.BB)
    rng = np.random.Generator(np.random.PCG64(seed))
    drawn = rng.integers(0, 2, size=(2, n))
    bits = _bitstring(params.get("bits", "".join(map(str, drawn[0]))), n, "bits")
    bases = _bitstring(params.get("bases", "".join(map(str, drawn[1]))), n, "bases")
    ops: list[GateOp] = []
    for q in range(n):
        # Z is the count-preserving filler for an absent X or H
        ops.append(GateOp.of("X" if bits[q] == "1" else "Z", q))
        ops.append(GateOp.of("H" if bases[q] == "1" else "Z", q))
    return ops, {"bits": bits, "bases": bases, "seed": seed}


def _bv(n: int, params: Mapping[str, Any], seed: int) -> tuple[list[GateOp], dict[str, Any]]:
    _check_keys(params, {"secret", "final_layer_width"}, BenchmarkFamily.BV)
    secret = _bitstring(params.get("secret", "1" * (n - 1)), n - 1, "secret")
    try:
        width = int(params.get("final_layer_width", n - 1))
    except (TypeError, ValueError):
        raise BenchmarkError("final_layer_width must be an integer") from None
    if not 0 <= width <= n:
        raise BenchmarkError(f"final_layer_width must be in [0, {n}], got {width}")
    ancilla = n - 1
    ops = [GateOp.of("X", ancilla)]
    ops += [GateOp.of("H", q) for q in range(n)]
    ops += [GateOp.of("CNOT", q, ancilla) for q in range(n - 1) if secret[q] == "1"]
    ops += [GateOp.of("H", q) for q in range(width)]
    return ops, {"secret": secret, "final_layer_width": width}


def _edc(n: int, params: Mapping[str, Any], seed: int) -> tuple[list[GateOp], dict[str, Any]]:
    _check_keys(params, set(), BenchmarkFamily.EDC)
    chain = [GateOp.of("CNOT", q, q + 1) for q in range(n - 1)]
    ops = [GateOp.of("H", q) for q in range(n)]
    ops += chain + list(reversed(chain))
    ops += [GateOp.of("H", q) for q in range(n)]
    return ops, {}


def _hs(n: int, params: Mapping[str, Any], seed: int) -> tuple[list[GateOp], dict[str, Any]]:
    _check_keys(params, set(), BenchmarkFamily.HS)
    if n % 2:
        raise BenchmarkError(f"HS needs an even qubit count, got {n}")
    half = n // 2
    h_layer = [GateOp.of("H", q) for q in range(n)]
    cx_layer = [GateOp.of("CNOT", q, half + q) for q in range(half)]
    return h_layer + cx_layer + h_layer + cx_layer + h_layer, {}


def _qrng(n: int, params: Mapping[str, Any], seed: int) -> tuple[list[GateOp], dict[str, Any]]:
    _check_keys(params, set(), BenchmarkFamily.QRNG)
    return [GateOp.of("H", q) for q in range(n)], {}


def _xor(n: int, params: Mapping[str, Any], seed: int) -> tuple[list[GateOp], dict[str, Any]]:
    _check_keys(params, set(), BenchmarkFamily.XOR)
    return [GateOp.of("CNOT", q, q + 1) for q in range(n - 1)], {}


_GENERATORS: dict[BenchmarkFamily, Callable[[int, Mapping[str, Any], int], tuple[list[GateOp], dict[str, Any]]]] = {
    BenchmarkFamily.BB: _bb,
    BenchmarkFamily.BV: _bv,
    BenchmarkFamily.EDC: _edc,
    BenchmarkFamily.HS: _hs,
    BenchmarkFamily.QRNG: _qrng,
    BenchmarkFamily.XOR: _xor,
}


def gen_benchmark(
    family: str | BenchmarkFamily,
    n: int,
    params: Mapping[str, Any] | None = None,
    seed: int = 0,
) -> CircuitIR:
    """
    Build an n-qubit benchmark circuit.

    Args:
        family: BB, BV, EDC, HS, QRNG or XOR (case-insensitive)
        n: qubit count, at least 2
        params: BV takes secret (length n-1) and final_layer_width; BB takes bits and bases (length n)
        seed: PCG64 seed for parameters the caller leaves out (BB); recorded in metadata

    Raises:
        BenchmarkError: unknown family, bad n, or params inconsistent with n
    """
    fam = BenchmarkFamily.parse(family)
    if not isinstance(n, int) or n < 2:
        raise BenchmarkError(f"benchmark size must be an integer >= 2, got {n!r}")
    ops, recorded = _GENERATORS[fam](n, dict(params or {}), seed)
    logger.debug("generated %s_%d with %d ops", fam.value, n, len(ops))
    return CircuitIR(n, tuple(ops), CircuitMetadata(name=f"{fam.value}_{n}", params={"family": fam.value, **recorded}))

# src/pimsim/data/gaussint.py

"""
Exact Gaussian integers and integer gate matrices.

An IntGateMatrix M with half-shift d denotes the unitary M / (sqrt 2)^d.
Entries are GaussInt so every product, tensor and unitarity check is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True, slots=True)
class GaussInt:
    """Complex number with integer real and imaginary parts."""

    re: int = 0
    im: int = 0

    def __add__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: GaussInt | int) -> GaussInt:
        if isinstance(other, int):
            return GaussInt(self.re * other, self.im * other)
        return GaussInt(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def conj(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        """|z|^2, always an exact non-negative integer."""
        return self.re * self.re + self.im * self.im

    def is_even(self) -> bool:
        return self.re % 2 == 0 and self.im % 2 == 0

    def halve(self) -> GaussInt:
        if not self.is_even():
            raise ValueError(f"{self} is not divisible by 2")
        return GaussInt(self.re // 2, self.im // 2)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def from_complex(cls, value: complex, tol: float = 1e-12) -> GaussInt | None:
        """Round value to the nearest Gaussian integer, or None if it is further than tol."""
        re, im = round(value.real), round(value.imag)
        if abs(value.real - re) > tol or abs(value.imag - im) > tol:
            return None
        return cls(int(re), int(im))

    def __repr__(self) -> str:
        if self.im == 0:
            return f"{self.re}"
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)

Entries = tuple[tuple[GaussInt, ...], ...]


def _entries(rows: Iterable[Iterable[GaussInt | int]]) -> Entries:
    return tuple(tuple(e if isinstance(e, GaussInt) else GaussInt(int(e), 0) for e in row) for row in rows)


@dataclass(frozen=True)
class IntGateMatrix:
    """
    Unitary-up-to-(sqrt 2)^d matrix with Gaussian integer entries.

    operand_qubits[0] is the most significant bit of the local row/column index.
    """

    entries: Entries
    half_shift: int
    operand_qubits: tuple[int, ...]

    def __post_init__(self) -> None:
        dim = len(self.entries)
        if dim != 2 ** len(self.operand_qubits) or any(len(row) != dim for row in self.entries):
            raise ValueError(f"{dim}x? matrix does not match {len(self.operand_qubits)} operand qubit(s)")
        if self.half_shift < 0:
            raise ValueError("half_shift must be non-negative")

    @classmethod
    def of(cls, rows: Sequence[Sequence[GaussInt | int]], half_shift: int, operand_qubits: Sequence[int]) -> IntGateMatrix:
        return cls(_entries(rows), half_shift, tuple(operand_qubits))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def arity(self) -> int:
        return len(self.operand_qubits)

    def with_operands(self, operand_qubits: Sequence[int]) -> IntGateMatrix:
        return IntGateMatrix(self.entries, self.half_shift, tuple(operand_qubits))

    def dagger(self) -> IntGateMatrix:
        dim = self.dim
        rows = tuple(tuple(self.entries[c][r].conj() for c in range(dim)) for r in range(dim))
        return IntGateMatrix(rows, self.half_shift, self.operand_qubits)

    def matmul(self, other: IntGateMatrix) -> IntGateMatrix:
        """self @ other (other applied first); operands must agree."""
        if self.operand_qubits != other.operand_qubits:
            raise ValueError(f"operand mismatch {self.operand_qubits} vs {other.operand_qubits}")
        dim = self.dim
        rows = []
        for r in range(dim):
            row = []
            for c in range(dim):
                acc = ZERO
                for j in range(dim):
                    a, b = self.entries[r][j], other.entries[j][c]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return IntGateMatrix(tuple(rows), self.half_shift + other.half_shift, self.operand_qubits)

    def tensor(self, other: IntGateMatrix) -> IntGateMatrix:
        """Kronecker product; self's operands become the high local bits."""
        if set(self.operand_qubits) & set(other.operand_qubits):
            raise ValueError("tensor operands must be disjoint")
        rows = []
        for ra in range(self.dim):
            for rb in range(other.dim):
                rows.append(
                    tuple(
                        self.entries[ra][ca] * other.entries[rb][cb]
                        for ca in range(self.dim)
                        for cb in range(other.dim)
                    )
                )
        return IntGateMatrix(
            tuple(rows), self.half_shift + other.half_shift, self.operand_qubits + other.operand_qubits
        )

    def gram(self) -> Entries:
        """M @ M^dagger, exact."""
        return self.matmul(self.dagger()).entries

    def is_unitary(self) -> bool:
        """M M^dagger == 2^d I exactly."""
        target = GaussInt(2**self.half_shift, 0)
        gram = self.gram()
        return all(gram[r][c] == (target if r == c else ZERO) for r in range(self.dim) for c in range(self.dim))

    def is_permutation(self) -> bool:
        """d == 0 and every row and column holds exactly one 1, zeros elsewhere."""
        if self.half_shift != 0:
            return False
        for row in self.entries:
            if sorted((e.re, e.im) for e in row) != [(0, 0)] * (self.dim - 1) + [(1, 0)]:
                return False
        cols = {row.index(ONE) for row in self.entries}
        return len(cols) == self.dim

    def permutation_source(self) -> tuple[int, ...]:
        """For a permutation matrix, the input local index feeding each output row."""
        if not self.is_permutation():
            raise ValueError("matrix is not a permutation")
        return tuple(row.index(ONE) for row in self.entries)

    def reduced(self) -> IntGateMatrix:
        """Divide out common factors of 2 while d >= 2."""
        m = self
        while m.half_shift >= 2 and all(e.is_even() for row in m.entries for e in row):
            m = IntGateMatrix(tuple(tuple(e.halve() for e in row) for row in m.entries), m.half_shift - 2, m.operand_qubits)
        return m

    def to_numpy(self) -> np.ndarray:
        """Float unitary entries / (sqrt 2)^d."""
        arr = np.array([[e.to_complex() for e in row] for row in self.entries], dtype=np.complex128)
        return arr / (np.sqrt(2.0) ** self.half_shift)

    def entry_pairs(self) -> list[list[list[int]]]:
        """Entries as [re, im] integer pairs, for JSON dumps."""
        return [[[e.re, e.im] for e in row] for row in self.entries]

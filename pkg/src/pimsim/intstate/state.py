# src/pimsim/intstate/state.py

"""
Integer state vector.

Amplitude j is nums[j] / (2^scale_k * (sqrt 2)^half_shift), with nums[j] a
Gaussian integer stored as two int64 arrays. Qubit 0 is bit 0 of j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from pimsim.data import GaussInt
from pimsim.errors import ContractViolation, KernelOverflowError, MemoryBudgetError

BYTES_PER_AMPLITUDE = 16
DEFAULT_HOST_BUDGET = 2**30

# Numerator magnitudes must stay below this so one more add cannot wrap int64
INT_LIMIT = 2**62


def state_footprint(n_qubits: int) -> int:
    """2^(n+4) bytes: 2^n amplitudes at 16 bytes each."""
    return (2**n_qubits) * BYTES_PER_AMPLITUDE


@dataclass
class QState:
    n_qubits: int
    re: np.ndarray
    im: np.ndarray
    half_shift: int = 0
    scale_k: int = 0

    @property
    def size(self) -> int:
        return int(self.re.shape[0])

    @property
    def nums(self) -> list[GaussInt]:
        return [GaussInt(int(r), int(i)) for r, i in zip(self.re.tolist(), self.im.tolist())]

    def copy(self) -> QState:
        return QState(self.n_qubits, self.re.copy(), self.im.copy(), self.half_shift, self.scale_k)

    def max_magnitude(self) -> int:
        if self.size == 0:
            return 0
        return int(max(np.abs(self.re).max(), np.abs(self.im).max()))

    def norm_sum(self) -> int:
        """Sum of |nums[j]|^2 in exact Python integers."""
        return sum(r * r + i * i for r, i in zip(self.re.tolist(), self.im.tolist()))

    def normalization_target(self) -> int:
        return 4**self.scale_k * 2**self.half_shift

    def is_normalized(self) -> bool:
        return self.norm_sum() == self.normalization_target()

    def check_normalized(self) -> None:
        if not self.is_normalized():
            raise ContractViolation(
                f"normalization broken: sum |nums|^2 = {self.norm_sum()} != 4^{self.scale_k} * 2^{self.half_shift}"
            )

    def is_integral(self) -> bool:
        """Every numerator divisible by 2^floor(s/2): amplitudes * 2^k are Gaussian integers up to a sqrt 2."""
        mask = (1 << (self.half_shift // 2)) - 1
        if mask == 0:
            return True
        return not bool(np.any(self.re & mask) or np.any(self.im & mask))

    def amplitudes(self) -> np.ndarray:
        """Complex128 amplitudes (lossy conversion for comparison with the oracle)."""
        exponent = -(self.scale_k + self.half_shift // 2)
        out = np.ldexp(self.re.astype(np.float64), exponent) + 1j * np.ldexp(self.im.astype(np.float64), exponent)
        if self.half_shift % 2:
            out = out / np.sqrt(2.0)
        return out

    def probabilities(self) -> list[Fraction]:
        return probabilities(self)


def init_state(n: int, scale_k: int = 0, budget_bytes: int = DEFAULT_HOST_BUDGET) -> QState:
    """
    |0...0> with the initial amplitude scaled by 2^scale_k.

    Raises:
        MemoryBudgetError: 2^(n+4) bytes above budget_bytes
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if scale_k < 0:
        raise ValueError(f"scale_k must be >= 0, got {scale_k}")
    if state_footprint(n) > budget_bytes:
        raise MemoryBudgetError(f"{n}-qubit state needs {state_footprint(n)} bytes, budget is {budget_bytes}")
    if 2**scale_k >= INT_LIMIT:
        raise KernelOverflowError(f"initial amplitude 2^{scale_k} does not fit the numerator range")
    re = np.zeros(2**n, dtype=np.int64)
    im = np.zeros(2**n, dtype=np.int64)
    re[0] = 2**scale_k
    return QState(n, re, im, 0, scale_k)


def probabilities(state: QState) -> list[Fraction]:
    """Exact |amplitude|^2 for every basis state; sums to exactly 1 on a normalized state."""
    denom = state.normalization_target()
    return [Fraction(r * r + i * i, denom) for r, i in zip(state.re.tolist(), state.im.tolist())]


def states_equal(a: QState, b: QState) -> bool:
    """Exact amplitude-wise equality; k, s and canonical form may differ."""
    if a.n_qubits != b.n_qubits:
        return False
    if a.half_shift < b.half_shift:
        a, b = b, a
    gap = a.half_shift - b.half_shift
    a_re, a_im, b_re, b_im = a.re.tolist(), a.im.tolist(), b.re.tolist(), b.im.tolist()
    if gap % 2:
        # sqrt 2 is irrational: only two zero vectors could match
        return not any(a_re) and not any(a_im) and not any(b_re) and not any(b_im)
    # a/(2^ka sqrt2^sa) == b/(2^kb sqrt2^sb)  <=>  a * 2^kb == b * 2^ka * 2^(gap/2)
    fa = 2**b.scale_k
    fb = 2**a.scale_k * 2 ** (gap // 2)
    return all(x * fa == y * fb for x, y in zip(a_re + a_im, b_re + b_im))

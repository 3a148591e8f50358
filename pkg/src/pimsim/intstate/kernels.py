# src/pimsim/intstate/kernels.py

"""
Integer kernels over QState.

Native kernels restrict themselves to add, subtract, negate, multiply by +-i
(re/im swap) and binary shifts; entries with magnitude above one are applied
as shift-and-add sums. Every kernel returns a new state and charges the
given ledger.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from pimsim.circuit import gate_entry_forms, gate_int_form, has_int_form
from pimsim.data import FloatEmuApply, IntGateMatrix, IntMatrixApply, PermApply, ProgramStep
from pimsim.errors import CircuitValidationError, KernelOverflowError, NonGaussianAmplitudeError

from .ledger import KernelLedger
from .state import BYTES_PER_AMPLITUDE, INT_LIMIT, QState


@lru_cache(maxsize=256)
def group_index(n_qubits: int, qubits: tuple[int, ...]) -> np.ndarray:
    """
    Global indices grouped by operand bits, shape (2^k, groups).

    Row l holds, for every assignment of the non-operand bits, the global index
    whose operand bits spell l (qubits[0] is the most significant bit of l).
    """
    k = len(qubits)
    mask = 0
    for q in qubits:
        mask |= 1 << q
    everything = np.arange(2**n_qubits, dtype=np.int64)
    bases = everything[(everything & mask) == 0]
    offsets = np.zeros(2**k, dtype=np.int64)
    for local in range(2**k):
        for i, q in enumerate(qubits):
            if (local >> (k - 1 - i)) & 1:
                offsets[local] |= 1 << q
    index = offsets[:, None] + bases[None, :]
    index.setflags(write=False)
    return index


def _check_operands(state: QState, qubits: Sequence[int]) -> None:
    if any(q < 0 or q >= state.n_qubits for q in qubits):
        raise CircuitValidationError(f"operands {tuple(qubits)} out of range for {state.n_qubits} qubits")
    if len(set(qubits)) != len(qubits):
        raise CircuitValidationError(f"duplicate operands {tuple(qubits)}")


def canonicalize(state: QState, ledger: KernelLedger) -> None:
    """Factor common powers of 2 out of every numerator, lowering s by 2 per factor (in place)."""
    room = state.half_shift // 2
    if room == 0:
        return
    combined = int(np.bitwise_or.reduce(np.abs(state.re) | np.abs(state.im)))
    if combined == 0:
        return
    trailing = (combined & -combined).bit_length() - 1
    shift = min(trailing, room)
    if shift:
        state.re >>= shift
        state.im >>= shift
        state.half_shift -= 2 * shift
        ledger.shifts += state.size


def _row_bound(m: IntGateMatrix) -> int:
    return max(sum(abs(e.re) + abs(e.im) for e in row) for row in m.entries)


def apply_int_matrix(state: QState, m: IntGateMatrix, ledger: KernelLedger | None = None) -> QState:
    """
    new group numerators = m @ old group numerators, then s += d and canonicalisation.

    Raises:
        CircuitValidationError: operands out of range
        KernelOverflowError: an output numerator could leave the int64 headroom
    """
    ledger = ledger if ledger is not None else KernelLedger()
    _check_operands(state, m.operand_qubits)
    if _row_bound(m) * state.max_magnitude() >= INT_LIMIT:
        raise KernelOverflowError(f"applying a {m.dim}x{m.dim} matrix would overflow the numerator range")

    index = group_index(state.n_qubits, m.operand_qubits)
    groups = index.shape[1]
    old_re, old_im = state.re[index], state.im[index]
    new_re = np.zeros_like(old_re)
    new_im = np.zeros_like(old_im)
    rotated: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    local = KernelLedger()

    for r in range(m.dim):
        acc: tuple[np.ndarray, np.ndarray] | None = None
        for c in range(m.dim):
            entry = m.entries[r][c]
            for coeff, use_i in ((entry.re, False), (entry.im, True)):
                if coeff == 0:
                    continue
                if use_i:
                    if c not in rotated:
                        # i * (x + iy) = -y + ix
                        rotated[c] = (-old_im[c], old_re[c])
                        local.reim_swaps += 1
                    zr, zi = rotated[c]
                else:
                    zr, zi = old_re[c], old_im[c]
                magnitude, bit = abs(coeff), 0
                while magnitude:
                    if magnitude & 1:
                        if bit:
                            tr, ti = zr << bit, zi << bit
                            local.shifts += 1
                        else:
                            tr, ti = zr, zi
                        if acc is None:
                            if coeff < 0:
                                acc = (-tr, -ti)
                                local.negs += 1
                            else:
                                acc = (tr.copy(), ti.copy())
                        elif coeff < 0:
                            acc = (acc[0] - tr, acc[1] - ti)
                            local.subs += 1
                        else:
                            acc = (acc[0] + tr, acc[1] + ti)
                            local.adds += 1
                    magnitude >>= 1
                    bit += 1
        if acc is not None:
            new_re[r], new_im[r] = acc

    for name in ("adds", "subs", "negs", "reim_swaps", "shifts"):
        setattr(ledger, name, getattr(ledger, name) + getattr(local, name) * groups)
    ledger.bytes_touched += 2 * index.size * BYTES_PER_AMPLITUDE

    out = state.copy()
    out.re[index] = new_re
    out.im[index] = new_im
    out.half_shift += m.half_shift
    canonicalize(out, ledger)
    return out


def _cycle_swaps(source: Sequence[int]) -> int:
    """Element swaps needed to realise a permutation: sum of (cycle length - 1)."""
    seen = [False] * len(source)
    swaps = 0
    for start in range(len(source)):
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = source[j]
            length += 1
        swaps += max(length - 1, 0)
    return swaps


def apply_permutation(state: QState, p: PermApply, ledger: KernelLedger | None = None) -> QState:
    """Move numerators per the permutation's truth table; s and the numerator multiset are unchanged."""
    ledger = ledger if ledger is not None else KernelLedger()
    _check_operands(state, p.qubits)
    index = group_index(state.n_qubits, p.qubits)
    source = np.asarray(p.source, dtype=np.int64)
    out = state.copy()
    out.re[index] = state.re[index[source]]
    out.im[index] = state.im[index[source]]
    groups = index.shape[1]
    moved = sum(1 for r, s in enumerate(p.source) if r != s)
    ledger.element_swaps += _cycle_swaps(p.source) * groups
    ledger.bytes_touched += 2 * moved * groups * BYTES_PER_AMPLITUDE
    return out


def _apply_mixed_diagonal(state: QState, g: FloatEmuApply) -> QState:
    """Exact application of a diagonal gate whose entries need different denominators (T, Tdg)."""
    forms = gate_entry_forms(g.kind)
    index = group_index(state.n_qubits, g.qubits)
    re, im = state.re[index], state.im[index]
    occupied = [l for l in range(index.shape[0]) if np.any(re[l]) or np.any(im[l])]
    shifts = {forms[l][l][1] for l in occupied}
    if len({d % 2 for d in shifts}) > 1:
        raise NonGaussianAmplitudeError(f"{g.kind} on qubits {g.qubits} mixes sqrt 2 parities in the current state")
    top = max(shifts, default=0)
    bound = max(abs(forms[l][l][0].re) + abs(forms[l][l][0].im) for l in range(len(forms)))
    if bound * 2 ** (top // 2 + 1) * state.max_magnitude() >= INT_LIMIT:
        raise KernelOverflowError(f"{g.kind} would overflow the numerator range")
    new_re, new_im = np.zeros_like(re), np.zeros_like(im)
    for l in occupied:
        num, d = forms[l][l]
        factor = 2 ** ((top - d) // 2)
        a, b = num.re * factor, num.im * factor
        new_re[l] = a * re[l] - b * im[l]
        new_im[l] = a * im[l] + b * re[l]
    out = state.copy()
    out.re[index] = new_re
    out.im[index] = new_im
    out.half_shift += top
    canonicalize(out, KernelLedger())
    return out


def apply_float_emu(state: QState, g: FloatEmuApply, ledger: KernelLedger | None = None) -> QState:
    """
    Same result as the exact application; the ledger is charged 2^n * dim emulated float ops instead.

    Raises:
        NonGaussianAmplitudeError: a T-family gate would put amplitudes of both sqrt 2 parities together
    """
    ledger = ledger if ledger is not None else KernelLedger()
    _check_operands(state, g.qubits)
    if has_int_form(g.kind):
        out = apply_int_matrix(state, gate_int_form(g.kind, g.qubits), KernelLedger())
    else:
        out = _apply_mixed_diagonal(state, g)
    dim = 2 ** len(g.qubits)
    ledger.emulated_float_ops += state.size * dim
    ledger.bytes_touched += 2 * state.size * BYTES_PER_AMPLITUDE
    return out


def apply_step(state: QState, step: ProgramStep, ledger: KernelLedger | None = None) -> QState:
    if isinstance(step, IntMatrixApply):
        return apply_int_matrix(state, step.matrix, ledger)
    if isinstance(step, PermApply):
        return apply_permutation(state, step, ledger)
    return apply_float_emu(state, step, ledger)

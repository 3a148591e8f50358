"""
Tests for Gaussian integers and IntGateMatrix algebra.
"""

import pytest

from pimsim.data import GaussInt, IntGateMatrix

H = IntGateMatrix.of([[1, 1], [1, -1]], 1, (0,))
RY = IntGateMatrix.of([[1, -1], [1, 1]], 1, (1,))


def test_gaussint_arithmetic() -> None:
    """Products follow (a+bi)(c+di) and norms are exact."""
    a, b = GaussInt(1, 2), GaussInt(3, -1)
    assert a * b == GaussInt(5, 5)
    assert a + b == GaussInt(4, 1)
    assert -a == GaussInt(-1, -2)
    assert a.conj() == GaussInt(1, -2)
    assert (a * a.conj()).im == 0
    assert a.norm() == 5
    assert 3 * a == GaussInt(3, 6)


def test_gaussint_halve_and_rounding() -> None:
    assert GaussInt(4, -2).halve() == GaussInt(2, -1)
    with pytest.raises(ValueError):
        GaussInt(3, 2).halve()
    assert GaussInt.from_complex(complex(2.0000000000001, -1.0)) == GaussInt(2, -1)
    assert GaussInt.from_complex(complex(0.5, 0)) is None


def test_tensor_puts_self_on_high_bits() -> None:
    """H (q0) tensor RY (q1) is kron(H, RY) with d=2 over operands (0, 1)."""
    m = H.tensor(RY)
    assert m.operand_qubits == (0, 1)
    assert m.half_shift == 2
    expected = [[1, -1, 1, -1], [1, 1, 1, 1], [1, -1, -1, 1], [1, 1, -1, -1]]
    assert [[e.re for e in row] for row in m.entries] == expected
    assert all(e.im == 0 for row in m.entries for e in row)
    assert m.is_unitary()


def test_matmul_adds_half_shifts_and_reduces() -> None:
    """H.H = 2I at d=2; reduced() gives I at d=0."""
    hh = H.matmul(H)
    assert hh.half_shift == 2
    assert [[e.re for e in row] for row in hh.entries] == [[2, 0], [0, 2]]
    assert hh.is_unitary()
    identity = hh.reduced()
    assert identity.half_shift == 0
    assert identity.is_permutation()
    assert identity.permutation_source() == (0, 1)


def test_matmul_rejects_operand_mismatch() -> None:
    with pytest.raises(ValueError):
        H.matmul(RY)
    with pytest.raises(ValueError):
        H.tensor(H)


def test_non_unitary_and_bad_shapes() -> None:
    assert not IntGateMatrix.of([[1, 1], [1, 1]], 1, (0,)).is_unitary()
    with pytest.raises(ValueError):
        IntGateMatrix.of([[1, 0], [0, 1]], 0, (0, 1))
    with pytest.raises(ValueError):
        IntGateMatrix.of([[1, 0], [0, 1]], -1, (0,))


def test_dagger_and_to_numpy() -> None:
    s = IntGateMatrix.of([[1, 0], [0, GaussInt(0, 1)]], 0, (0,))
    assert s.dagger().entries[1][1] == GaussInt(0, -1)
    assert s.matmul(s.dagger()).is_permutation()
    u = H.to_numpy()
    assert abs(u[1, 1] + 2**-0.5) < 1e-12

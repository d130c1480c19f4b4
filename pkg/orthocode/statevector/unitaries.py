"""Explicit ``2ⁿ × 2ⁿ`` matrices for Pauli elements and for the
Clifford generators, used to tie the binary actions to conjugation in
Hilbert space."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from orthocode.clifford.action import Gate, GateKind
from orthocode.clifford.exceptions import QubitIndexException
from orthocode.gf2.matrix import GF2Matrix
from orthocode.gf2.vector import SympVector
from orthocode.pauli.element import PauliElement, PhaseMode
from orthocode.statevector.state import check_size, labels, pauli_rows

Matrix = npt.NDArray[np.complex128]

_PHASES = (1, 1j, -1, -1j)


def pauli_matrix(e: PauliElement) -> Matrix:
    """The matrix of ``e``; column ``v`` is ``e|v⟩``.

    Examples:
        >>> from orthocode.pauli import PauliElement
        >>> e = PauliElement.from_string("X(10)Z(01)")
        >>> identify_pauli(pauli_matrix(e), 2)
        PauliElement('+X(10)Z(01)')
    """
    check_size(e.n)
    return pauli_rows(e, np.eye(1 << e.n, dtype=np.complex128))


def identify_pauli(
    matrix: Matrix, n: int, atol: float = 1e-12
) -> PauliElement | None:
    """The complex-mode element equal to ``matrix``, or ``None`` when
    it is not a phase times ``X(a)Z(b)``."""
    column = matrix[:, 0]
    a = int(np.argmax(np.abs(column)))
    scalar = column[a]
    phase = next(
        (p for p, z in enumerate(_PHASES) if abs(scalar - z) <= atol), None
    )
    if phase is None:
        return None
    b = 0
    for j in range(n):
        unit = 1 << (n - 1 - j)
        if (matrix[unit ^ a, unit] / scalar).real < 0:
            b |= unit
    candidate = PauliElement(SympVector(n, a, b), phase, PhaseMode.COMPLEX)
    if np.allclose(pauli_matrix(candidate), matrix, rtol=0, atol=atol):
        return candidate
    return None


def hadamard_all_unitary(n: int) -> Matrix:
    """``2^(-n/2) [(-1)^(u·v)]``."""
    check_size(n)
    idx = labels(n)
    parity = np.bitwise_count(idx[:, None] & idx[None, :]) & 1
    signs = 1.0 - 2.0 * parity
    return signs.astype(np.complex128) / np.sqrt(1 << n)


def gl_unitary(a_matrix: GF2Matrix) -> Matrix:
    """The permutation ``|v⟩ ↦ |vA⟩``."""
    n = a_matrix.nrows
    check_size(n)
    out = np.zeros((1 << n, 1 << n), dtype=np.complex128)
    for v in range(1 << n):
        out[a_matrix.row_times(v), v] = 1.0
    return out


def hadamard_single_unitary(n: int, j: int) -> Matrix:
    """``H`` on qubit ``j`` (1-based, qubit 1 leftmost)."""
    check_size(n)
    if not 1 <= j <= n:
        raise QubitIndexException(n, j)
    h = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2)
    out = np.eye(1, dtype=np.complex128)
    for q in range(1, n + 1):
        out = np.kron(out, h if q == j else np.eye(2))
    return out


def _pairs(matrix: GF2Matrix) -> npt.NDArray[np.int64]:
    """``Σ_{i<j} m_ij v_i v_j`` for every label ``v``."""
    n = matrix.nrows
    idx = labels(n)
    total = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if matrix[i, j]:
                vi = (idx >> (n - 1 - i)) & 1
                vj = (idx >> (n - 1 - j)) & 1
                total += vi & vj
    return total


def diag_m_unitary(m_matrix: GF2Matrix) -> Matrix:
    """``d_M = diag[(-1)^(Σ_{i<j} M_ij v_i v_j)]``."""
    check_size(m_matrix.nrows)
    exponent = _pairs(m_matrix) & 1
    return np.diag((1 - 2 * exponent).astype(np.complex128))


def diag_p_unitary(p_matrix: GF2Matrix) -> Matrix:
    """``d_P = diag[i^(Σ P_ii v_i + 2 Σ_{i<j} P_ij v_i v_j)]``."""
    n = p_matrix.nrows
    check_size(n)
    idx = labels(n)
    linear = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        if p_matrix[i, i]:
            linear += (idx >> (n - 1 - i)) & 1
    exponent = (linear + 2 * _pairs(p_matrix)) % 4
    return np.diag(np.array(_PHASES, dtype=np.complex128)[exponent])


def generator_unitary(gate: Gate, n: int) -> Matrix:
    """The Hilbert-space matrix of one generator on ``n`` qubits."""
    if gate.kind is GateKind.H_ALL:
        return hadamard_all_unitary(n)
    if gate.kind is GateKind.H:
        return hadamard_single_unitary(n, gate.qubit or 0)
    assert gate.matrix is not None
    if gate.kind is GateKind.GL:
        return gl_unitary(gate.matrix)
    if gate.kind is GateKind.DM:
        return diag_m_unitary(gate.matrix)
    return diag_p_unitary(gate.matrix)


def conjugate(unitary: Matrix, e: PauliElement) -> PauliElement | None:
    """``U e U†`` as a group element, or ``None`` if it is not one."""
    image = unitary @ pauli_matrix(e) @ unitary.conj().T
    return identify_pauli(image, e.n)

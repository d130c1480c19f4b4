"""The induced actions of the Clifford generators on the binary space.

Each builder returns a :class:`SympMatrix` whose word holds the single
generator it realises, so products built with ``@`` carry their own
decomposition.
"""

from __future__ import annotations

from orthocode.clifford.action import Gate, GateKind, SympMatrix
from orthocode.clifford.exceptions import (
    NonSymmetricMatrixException,
    QubitIndexException,
)
from orthocode.gf2.exceptions import DimensionException
from orthocode.gf2.matrix import GF2Matrix, swap_halves


def _unit(size: int, i: int) -> int:
    return 1 << (size - 1 - i)


def hadamard_all(n: int) -> SympMatrix:
    """``H`` on every qubit: ``(a|b) ↦ (b|a)``.

    Examples:
        >>> from orthocode.gf2 import SympVector
        >>> h = hadamard_all(5)
        >>> str(h.apply(SympVector.from_string("11000|00101")))
        '00101|11000'
    """
    size = 2 * n
    rows = tuple(swap_halves(_unit(size, i), n) for i in range(size))
    return SympMatrix(
        n, GF2Matrix(rows, size), True, (Gate(GateKind.H_ALL),)
    )


def gl_action(a_matrix: GF2Matrix) -> SympMatrix:
    """The permutation ``|v⟩ ↦ |vA⟩`` acting as ``(a|b) ↦ (aA | bA⁻ᵀ)``.

    Args:
        a_matrix (GF2Matrix): An invertible ``n × n`` matrix.

    Raises:
        DimensionException: If the matrix is not square.
        SingularMatrixException: If it is not invertible.

    Examples:
        >>> xor = gl_action(GF2Matrix.from_strings(["11", "01"]))
        >>> print(xor)
        1100
        0100
        0010
        0011
    """
    n = a_matrix.nrows
    if a_matrix.ncols != n:
        raise DimensionException("gl_action", n, a_matrix.ncols)
    inv_t = a_matrix.inverse().transpose()
    rows = tuple(r << n for r in a_matrix) + tuple(inv_t)
    return SympMatrix(
        n,
        GF2Matrix(rows, 2 * n),
        True,
        (Gate(GateKind.GL, matrix=a_matrix),),
    )


def hadamard_single(n: int, j: int) -> SympMatrix:
    """``H`` on qubit ``j`` only (1-based): swaps ``a_j`` with ``b_j``.

    Raises:
        QubitIndexException: If ``j`` lies outside ``1..n``.
    """
    if not 1 <= j <= n:
        raise QubitIndexException(n, j)
    size = 2 * n
    rows = [_unit(size, i) for i in range(size)]
    x_col, z_col = j - 1, n + j - 1
    rows[x_col], rows[z_col] = rows[z_col], rows[x_col]
    return SympMatrix(
        n, GF2Matrix(tuple(rows), size), True, (Gate(GateKind.H, qubit=j),)
    )


def _shear(
    n: int, matrix: GF2Matrix, kind: GateKind, real: bool
) -> SympMatrix:
    if matrix.shape != (n, n):
        raise DimensionException(kind.value, n, matrix.nrows)
    if not matrix.is_symmetric():
        raise NonSymmetricMatrixException(kind.value, "not symmetric")
    size = 2 * n
    rows = tuple(
        (_unit(n, i) << n) | matrix[i] for i in range(n)
    ) + tuple(_unit(size, i) for i in range(n, size))
    return SympMatrix(
        n, GF2Matrix(rows, size), real, (Gate(kind, matrix=matrix),)
    )


def diag_action(m_matrix: GF2Matrix) -> SympMatrix:
    """The diagonal sign matrix ``d_M``, acting as
    ``(a|b) ↦ (a | aM + b)``.

    ``M`` must be symmetric with a zero diagonal; only then is ``d_M``
    real and the quadratic form preserved.

    Raises:
        NonSymmetricMatrixException: If ``M`` is not symmetric or has a
            one on its diagonal.

    Examples:
        >>> from orthocode.gf2 import SympVector
        >>> dm = diag_action(GF2Matrix.from_strings(["01", "10"]))
        >>> str(dm.apply(SympVector.from_string("10|00")))
        '10|01'
    """
    if not m_matrix.has_zero_diagonal():
        raise NonSymmetricMatrixException(
            GateKind.DM.value, "nonzero diagonal"
        )
    return _shear(m_matrix.nrows, m_matrix, GateKind.DM, True)


def diag_action_complex(p_matrix: GF2Matrix) -> SympMatrix:
    """The complex diagonal matrix ``d_P``, acting as
    ``(a|b) ↦ (a | aP + b)``.

    ``P`` may carry ones on its diagonal. The result preserves the
    alternating form but is tagged complex, since a diagonal one
    breaks the quadratic form.

    Raises:
        NonSymmetricMatrixException: If ``P`` is not symmetric.
    """
    return _shear(p_matrix.nrows, p_matrix, GateKind.DP, False)


def realize(gate: Gate, n: int) -> SympMatrix:
    """The action of one serialised generator on ``n`` qubits."""
    if gate.kind is GateKind.H_ALL:
        return hadamard_all(n)
    if gate.kind is GateKind.H:
        return hadamard_single(n, gate.qubit or 0)
    assert gate.matrix is not None
    if gate.matrix.nrows != n:
        raise DimensionException(gate.kind.value, n, gate.matrix.nrows)
    if gate.kind is GateKind.GL:
        return gl_action(gate.matrix)
    if gate.kind is GateKind.DM:
        return diag_action(gate.matrix)
    return diag_action_complex(gate.matrix)

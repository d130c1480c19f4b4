from __future__ import annotations

from orthocode.clifford.action import SympMatrix
from orthocode.clifford.generators import (
    diag_action,
    diag_action_complex,
    gl_action,
    hadamard_single,
)
from orthocode.codes.code import StabilizerCode
from orthocode.codes.exceptions import InvalidCodeException
from orthocode.codes.validation.orchestrator import CodeValidationOrchestrator
from orthocode.gf2.matrix import GF2Matrix
from orthocode.gf2.vector import SympVector
from orthocode.observations import EncodingSynthesised
from orthocode.probes.probe import Probe, resolve


def canonical_subspace(n: int, k: int) -> list[SympVector]:
    """``(0…0 | e_i)`` for ``i = 1..k``."""
    return [SympVector(n, 0, 1 << (n - 1 - i)) for i in range(k)]


def _then(
    total: SympMatrix, step: SympMatrix, rows: list[SympVector]
) -> tuple[SympMatrix, list[SympVector]]:
    if step.is_identity():
        return total, rows
    return total @ step, [step.apply(v) for v in rows]


def _flatten(n: int, rows: list[SympVector]) -> SympMatrix:
    """Steps 1 and 2: turn the rows with an X part into ``(e_i|0)``."""
    total = SympMatrix.identity(n)
    x_parts = [v.a for v in rows if v.a]
    r = len(x_parts)
    if not r:
        return total
    completed = GF2Matrix(tuple(x_parts), n).complete_basis()
    total, rows = _then(total, gl_action(completed.inverse()), rows)

    # Row i now reads (e_i | b_i); M carries b_i in row and column i.
    shear = [0] * n
    for i, v in enumerate(rows[:r]):
        shear[i] |= v.b
        for j in range(r, n):
            if v.b >> (n - 1 - j) & 1:
                shear[j] |= 1 << (n - 1 - i)
    m_matrix = GF2Matrix(tuple(shear), n)
    if m_matrix.has_zero_diagonal():
        step = diag_action(m_matrix)
    else:
        step = diag_action_complex(m_matrix)
    total, rows = _then(total, step, rows)
    for j in range(1, r + 1):
        total = total @ hadamard_single(n, j)
    return total


def synthesize_encoding(
    code: StabilizerCode, probe: Probe | None = None
) -> SympMatrix:
    # pylint: disable=line-too-long
    """A Clifford action taking the canonical subspace
    ``span{(0|e_i) : i <= k̄}`` onto ``S̄``.

    The rows of ``S̄`` in reduced echelon form are carried to the
    canonical subspace by ``GL`` (unit X parts), ``d_M`` (clear the Z
    parts of those rows), ``H`` on the first qubits and a final
    ``GL``. The encoder is the inverse of that product; its word lists
    the inverted generators in reverse order. Codes with a generator
    of ``Q = 1`` need ``d_P`` in place of ``d_M`` and give a complex
    action.

    Raises:
        InvalidCodeException: If the generators are not independent
            and pairwise orthogonal.

    Examples:
        >>> from orthocode.codes.builtins import builtin
        >>> from orthocode.gf2 import in_span
        >>> code = builtin("five_qubit")
        >>> g = synthesize_encoding(code)
        >>> all(in_span(g.apply(v), code.matrix) for v in canonical_subspace(5, 4))
        True
    """
    found = CodeValidationOrchestrator(strict=False).validate(code)
    if not found.valid:
        raise InvalidCodeException(
            "synthesize_encoding", map(str, found.violations)
        )
    n = code.n
    rows = code.matrix.row_reduce().to_vectors() if code.generators else []
    forward = _flatten(n, rows)
    rows = [forward.apply(v) for v in rows]

    # Every row is now (0|z); move the z parts onto e_1..e_k.
    z_parts = GF2Matrix(tuple(v.b for v in rows), n).complete_basis()
    forward, rows = _then(forward, gl_action(z_parts.transpose()), rows)

    encoder = forward.inverse()
    resolve(probe).observe(
        EncodingSynthesised(n, code.k_bar, len(encoder.word))
    )
    return encoder

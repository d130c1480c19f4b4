from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from orthocode.codes.code import StabilizerCode
from orthocode.codes.exceptions import InvalidCodeException
from orthocode.codes.validation.orchestrator import CodeValidationOrchestrator
from orthocode.statevector.exceptions import ConsistencyException
from orthocode.statevector.state import (
    Amplitudes,
    StateVector,
    check_size,
    pauli_rows,
)
from orthocode.statevector.unitaries import Matrix, pauli_matrix

# Projected norms below this count as zero.
_ZERO = 1e-9


def _with_character(
    code: StabilizerCode, character: Sequence[int] | None
) -> StabilizerCode:
    found = CodeValidationOrchestrator(strict=False).validate(code)
    if not found.valid:
        raise InvalidCodeException(
            "codespace_basis", map(str, found.violations)
        )
    return code if character is None else code.with_signs(character)


def project(code: StabilizerCode, amplitudes: Amplitudes) -> Amplitudes:
    """Applies ``∏ (I + χ_i s_i)/2`` along axis 0."""
    out = np.asarray(amplitudes, dtype=np.complex128)
    for element in code.elements():
        out = (out + pauli_rows(element, out)) / 2
    return out


def projector_matrix(
    code: StabilizerCode, character: Sequence[int] | None = None
) -> Matrix:
    """The projector onto the codespace as an explicit matrix."""
    code = _with_character(code, character)
    check_size(code.n)
    out = np.eye(1 << code.n, dtype=np.complex128)
    for element in code.elements():
        out = out @ (np.eye(1 << code.n) + pauli_matrix(element)) / 2
    return out


def _canonical_phase(vector: Amplitudes) -> Amplitudes:
    """Scales by a unit phase so the first nonzero amplitude is real
    and positive."""
    first = vector[np.flatnonzero(np.abs(vector) > _ZERO)[0]]
    return vector * (abs(first) / first)


def codespace_basis(
    code: StabilizerCode, character: Sequence[int] | None = None
) -> list[StateVector]:
    """An orthonormal basis of the joint eigenspace where generator
    ``i`` has eigenvalue ``character[i]`` (the code's own signs when
    ``character`` is omitted).

    Basis states ``|v⟩`` are projected in increasing ``v`` and
    orthonormalised until ``2^(n - k̄)`` vectors are found; each is
    scaled so its first nonzero amplitude is positive.

    Raises:
        InvalidCodeException: If the generators are not independent
            and pairwise orthogonal.
        StateSizeException: If ``n`` exceeds the dense limit.
        ConsistencyException: If the eigenspace has the wrong size.

    Examples:
        >>> from orthocode.codes.builtins import builtin
        >>> len(codespace_basis(builtin("five_qubit")))
        2
    """
    code = _with_character(code, character)
    n = code.n
    check_size(n)
    target = 1 << code.encoded_qubits
    found: list[Amplitudes] = []
    for v in range(1 << n):
        start = np.zeros(1 << n, dtype=np.complex128)
        start[v] = 1.0
        vector = project(code, start)
        for prior in found:
            vector = vector - np.vdot(prior, vector) * prior
        size = np.linalg.norm(vector)
        if size > _ZERO:
            found.append(_canonical_phase(vector / size))
            if len(found) == target:
                break
    if len(found) != target:
        raise ConsistencyException(target, len(found))
    return [StateVector(n, vector) for vector in found]

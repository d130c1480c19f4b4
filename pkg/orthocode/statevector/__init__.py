from collections.abc import Sequence

from orthocode.statevector.codespace import (
    codespace_basis,
    project,
    projector_matrix,
)
from orthocode.statevector.codewords import (
    FIVE_QUBIT_CODEWORDS,
    five_qubit_codewords,
    format_terms,
    parse_terms,
)
from orthocode.statevector.kl import KLResult, verify_kl_conditions
from orthocode.statevector.state import StateVector, apply_pauli
from orthocode.statevector.unitaries import (
    conjugate,
    diag_m_unitary,
    diag_p_unitary,
    generator_unitary,
    gl_unitary,
    hadamard_all_unitary,
    hadamard_single_unitary,
    identify_pauli,
    pauli_matrix,
)

__all__: Sequence[str] = [
    "FIVE_QUBIT_CODEWORDS",
    "KLResult",
    "StateVector",
    "apply_pauli",
    "codespace_basis",
    "conjugate",
    "diag_m_unitary",
    "diag_p_unitary",
    "five_qubit_codewords",
    "format_terms",
    "generator_unitary",
    "gl_unitary",
    "hadamard_all_unitary",
    "hadamard_single_unitary",
    "identify_pauli",
    "parse_terms",
    "pauli_matrix",
    "project",
    "projector_matrix",
    "verify_kl_conditions",
]

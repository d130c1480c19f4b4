from functools import reduce

import numpy as np
import pytest

from orthocode.clifford.action import GateKind
from orthocode.codes.builtins import BuiltinCode, builtin
from orthocode.codes.constructions import quadratic_residue_code
from orthocode.codes.correctability import correctable
from orthocode.codes.encoding import canonical_subspace, synthesize_encoding
from orthocode.pauli.element import PauliElement, PhaseMode
from orthocode.pauli.error_sets import weight_t_error_set
from orthocode.statevector.codespace import codespace_basis
from orthocode.statevector.kl import verify_kl_conditions
from orthocode.statevector.state import StateVector, apply_pauli
from orthocode.statevector.unitaries import conjugate, generator_unitary

CODES = [builtin(name) for name in BuiltinCode] + [quadratic_residue_code(5)]


def _word_unitary(word, n):
    size = 1 << n
    return reduce(
        lambda acc, gate: generator_unitary(gate, n) @ acc,
        word,
        np.eye(size, dtype=np.complex128),
    )


@pytest.mark.parametrize("code", CODES, ids=lambda c: c.name or "qr5")
class TestCriteriaAgree:

    @pytest.mark.parametrize("t", [1, 2])
    def test_same_verdict(self, code, t):
        # Arrange
        errors = weight_t_error_set(code.n, t)
        # Act
        membership = correctable(code, errors)
        state_vector = verify_kl_conditions(code, errors)
        # Assert
        assert membership.holds == state_vector.holds
        assert membership.indices == state_vector.indices

    def test_codespace_dimension(self, code):
        # Act
        basis = codespace_basis(code)
        # Assert
        assert len(basis) == 2**code.encoded_qubits


@pytest.mark.parametrize(
    "code", [builtin("five_qubit"), quadratic_residue_code(5)], ids=str
)
class TestEncoderInHilbertSpace:

    def test_conjugation_matches_binary_action(self, code):
        # Arrange
        encoder = synthesize_encoding(code)
        u = _word_unitary(encoder.word, code.n)
        # Act + Assert
        for v in canonical_subspace(code.n, code.k_bar):
            image = conjugate(u, PauliElement(v, 0, PhaseMode.COMPLEX))
            assert image is not None
            assert image.vector == encoder.apply(v)
            assert code.in_stabilizer(image.vector)
            assert image.phase % 2 == 0

    def test_encoded_zero_is_a_common_eigenvector(self, code):
        # Arrange
        encoder = synthesize_encoding(code)
        assert GateKind.DP not in {g.kind for g in encoder.word}
        u = _word_unitary(encoder.word, code.n)
        # Act
        psi = StateVector(code.n, u[:, 0])
        # Assert
        for element in code.elements():
            image = apply_pauli(element, psi)
            assert image.allclose(psi, atol=1e-9) or image.allclose(
                psi * -1, atol=1e-9
            )

from itertools import product

import numpy as np
import pytest

from orthocode.codes.builtins import builtin
from orthocode.codes.code import StabilizerCode
from orthocode.codes.constructions import quadratic_residue_code
from orthocode.codes.correctability import shifted_character
from orthocode.codes.exceptions import InvalidCodeException
from orthocode.pauli.element import PauliElement
from orthocode.pauli.error_sets import weight_t_error_set
from orthocode.statevector.codespace import (
    codespace_basis,
    project,
    projector_matrix,
)
from orthocode.statevector.exceptions import StateSizeException
from orthocode.statevector.state import apply_pauli


@pytest.fixture
def five_qubit():
    return builtin("five_qubit")


class TestCodespaceBasis:

    def test_five_qubit_has_two_codewords(self, five_qubit):
        # Act
        basis = codespace_basis(five_qubit)
        # Assert
        assert len(basis) == 2
        assert basis[0].inner(basis[1]) == pytest.approx(0, abs=1e-12)
        assert all(psi.norm() == pytest.approx(1.0) for psi in basis)

    def test_codewords_are_fixed_by_every_element(self, five_qubit):
        # Act
        basis = codespace_basis(five_qubit)
        # Assert
        for element in five_qubit.elements():
            for psi in basis:
                assert apply_pauli(element, psi).allclose(psi, atol=1e-9)

    def test_first_amplitude_is_positive(self, five_qubit):
        # Act
        basis = codespace_basis(five_qubit)
        # Assert
        for psi in basis:
            support = np.flatnonzero(np.abs(psi.amplitudes) > 1e-9)
            first = psi.amplitudes[support[0]]
            assert first.real > 0
            assert first.imag == pytest.approx(0, abs=1e-12)

    def test_every_character_gives_two_codewords(self, five_qubit):
        # Act
        sizes = [
            len(codespace_basis(five_qubit, character))
            for character in product((1, -1), repeat=4)
        ]
        # Assert
        assert sizes == [2] * 16
        assert sum(sizes) == 32

    def test_character_is_honoured(self, five_qubit):
        # Arrange
        character = (1, -1, -1, 1)
        # Act
        basis = codespace_basis(five_qubit, character)
        # Assert
        for g, sign in zip(five_qubit.elements(), character):
            for psi in basis:
                assert apply_pauli(g, psi).allclose(psi * sign, atol=1e-9)

    @pytest.mark.parametrize(
        "code", [builtin("five_qubit"), quadratic_residue_code(5)]
    )
    def test_errors_move_codewords_to_shifted_character(self, code):
        # Arrange
        basis = codespace_basis(code)
        # Act + Assert
        for e in weight_t_error_set(code.n, 1):
            character = shifted_character(code, e)
            target = codespace_basis(code, character)
            for psi in basis:
                moved = apply_pauli(e, psi)
                for g in code.with_signs(character).elements():
                    assert apply_pauli(g, moved).allclose(moved, atol=1e-9)
                weight = sum(abs(phi.inner(moved)) ** 2 for phi in target)
                assert weight == pytest.approx(1.0)

    def test_empty_stabilizer_is_whole_space(self):
        # Arrange
        code = StabilizerCode.from_strings([], n=1)
        # Act
        basis = codespace_basis(code)
        # Assert
        assert len(basis) == 2

    def test_complex_generators(self):
        # Arrange
        code = StabilizerCode.from_strings(["1|1"])
        # Act
        basis = codespace_basis(code)
        # Assert
        y = code.elements()[0]
        assert len(basis) == 1
        assert apply_pauli(y, basis[0]).allclose(basis[0], atol=1e-9)

    def test_rejects_invalid_code(self):
        # Arrange
        code = StabilizerCode.from_strings(["10|00", "00|10"])
        # Act + Assert
        with pytest.raises(InvalidCodeException):
            codespace_basis(code)

    def test_size_limit(self):
        # Arrange
        code = StabilizerCode.from_strings(["1" * 13 + "|" + "0" * 13])
        # Act + Assert
        with pytest.raises(StateSizeException):
            codespace_basis(code)


class TestProjector:

    def test_idempotent_and_hermitian(self, five_qubit):
        # Act
        p = projector_matrix(five_qubit)
        # Assert
        assert np.allclose(p @ p, p)
        assert np.allclose(p, p.conj().T)
        assert np.trace(p).real == pytest.approx(2.0)

    def test_characters_partition_identity(self, five_qubit):
        # Act
        total = sum(
            projector_matrix(five_qubit, character)
            for character in product((1, -1), repeat=4)
        )
        # Assert
        assert np.allclose(total, np.eye(32))

    def test_project_matches_matrix(self, five_qubit):
        # Arrange
        start = np.arange(32, dtype=np.complex128)
        # Act
        projected = project(five_qubit, start)
        # Assert
        assert np.allclose(projected, projector_matrix(five_qubit) @ start)

    def test_project_kills_other_eigenspaces(self, five_qubit):
        # Arrange
        flip = PauliElement.from_string("X(10000)Z(00000)")
        psi = codespace_basis(five_qubit)[0]
        # Act
        projected = project(five_qubit, apply_pauli(flip, psi).amplitudes)
        # Assert
        assert np.allclose(projected, 0)

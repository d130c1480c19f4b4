import numpy as np
import pytest

from orthocode.gf2.exceptions import (
    DimensionException,
    SingularMatrixException,
)
from orthocode.gf2.matrix import (
    EchelonBasis,
    GF2Matrix,
    in_span,
    rank,
    symplectic_dual,
)
from orthocode.gf2.vector import SympVector, symplectic_product

FIVE_QUBIT = ["11000|00101", "01100|10010", "00110|01001", "00011|10100"]


@pytest.fixture
def five_qubit_matrix() -> GF2Matrix:
    return GF2Matrix.from_strings(FIVE_QUBIT)


class TestEchelonBasis:

    def test_rank_and_membership(self):
        # Arrange
        basis = EchelonBasis([0b110, 0b011, 0b101], 3)
        # Act + Assert
        assert basis.rank == 2
        assert basis.contains(0b101)
        assert not basis.contains(0b100)

    def test_records_dependent_combination(self):
        # Arrange
        basis = EchelonBasis([0b110, 0b011, 0b101], 3)
        # Act
        dependent = basis.dependent
        # Assert
        assert dependent == [0b111]

    def test_coordinates(self):
        # Arrange
        basis = EchelonBasis([0b110, 0b011], 3)
        # Act + Assert
        assert basis.coordinates(0b101) == 0b11
        assert basis.coordinates(0b100) is None


class TestGF2Matrix:

    def test_from_strings_ignores_bar(self, five_qubit_matrix):
        # Assert
        assert five_qubit_matrix.shape == (4, 10)
        assert five_qubit_matrix.to_vectors()[0] == SympVector.from_string(
            FIVE_QUBIT[0]
        )

    def test_entry_access(self):
        # Arrange
        m = GF2Matrix.from_strings(["100", "011"])
        # Act + Assert
        assert m[0, 0] == 1
        assert m[1, 0] == 0
        assert m[1] == 0b011

    def test_transpose(self):
        # Arrange
        m = GF2Matrix.from_strings(["110", "011"])
        # Act
        t = m.transpose()
        # Assert
        assert t.to_lists() == [[1, 0], [1, 1], [0, 1]]
        assert t.T == m

    def test_product(self):
        # Arrange
        m = GF2Matrix.from_strings(["11", "01"])
        # Act
        square = m @ m
        # Assert
        assert square == GF2Matrix.identity(2)

    def test_product_rejects_shapes(self):
        # Act + Assert
        with pytest.raises(DimensionException):
            GF2Matrix.identity(2) @ GF2Matrix.identity(3)

    def test_inverse(self):
        # Arrange
        m = GF2Matrix.from_strings(["110", "011", "001"])
        # Act
        inv = m.inverse()
        # Assert
        assert m @ inv == GF2Matrix.identity(3)
        assert inv @ m == GF2Matrix.identity(3)

    def test_inverse_of_singular_matrix(self):
        # Arrange
        m = GF2Matrix.from_strings(["110", "011", "101"])
        # Act + Assert
        with pytest.raises(SingularMatrixException):
            m.inverse()

    def test_row_reduce_is_deterministic(self):
        # Arrange
        m = GF2Matrix.from_strings(["011", "110", "101"])
        # Act
        reduced = m.row_reduce()
        # Assert
        assert str(reduced) == "101\n011"

    def test_nullspace(self):
        # Arrange
        m = GF2Matrix.from_strings(["1100", "0110"])
        # Act
        null = m.nullspace()
        # Assert
        assert null.nrows == 2
        for x in null:
            assert all(((r & x).bit_count() & 1) == 0 for r in m)

    def test_complete_basis(self):
        # Arrange
        m = GF2Matrix.from_strings(["110"])
        # Act
        full = m.complete_basis()
        # Assert
        assert full.rows[0] == 0b110
        assert full.rank() == 3

    def test_symmetry_and_diagonal(self):
        # Arrange
        m = GF2Matrix.from_strings(["01", "10"])
        # Act + Assert
        assert m.is_symmetric()
        assert m.has_zero_diagonal()
        assert not GF2Matrix.identity(2).has_zero_diagonal()


class TestSubspaces:

    def test_rank(self, five_qubit_matrix):
        # Act + Assert
        assert rank(five_qubit_matrix) == 4

    def test_rank_does_not_modify_input(self, five_qubit_matrix):
        # Arrange
        before = five_qubit_matrix.rows
        # Act
        rank(five_qubit_matrix)
        # Assert
        assert five_qubit_matrix.rows == before

    def test_in_span(self, five_qubit_matrix):
        # Act + Assert
        assert in_span(
            SympVector.from_string("10100|10111"), five_qubit_matrix
        )
        assert not in_span(
            SympVector.from_string("11111|00000"), five_qubit_matrix
        )

    def test_in_span_rejects_other_length(self, five_qubit_matrix):
        # Act + Assert
        with pytest.raises(DimensionException):
            in_span(SympVector.zero(4), five_qubit_matrix)

    def test_symplectic_dual_of_five_qubit_code(self, five_qubit_matrix):
        # Act
        dual = symplectic_dual(five_qubit_matrix)
        # Assert
        assert dual.nrows == 6
        for v in dual.to_vectors():
            for g in five_qubit_matrix.to_vectors():
                assert symplectic_product(v, g) == 0
        assert in_span(SympVector.from_string("11111|00000"), dual)
        assert in_span(SympVector.from_string("00000|11111"), dual)

    def test_dual_of_empty_set_is_everything(self):
        # Act
        dual = symplectic_dual(GF2Matrix.zeros(0, 6))
        # Assert
        assert dual.rank() == 6

    @pytest.mark.parametrize("seed", range(5))
    def test_dual_dimension_and_double_dual(self, seed):
        # Arrange
        rng = np.random.default_rng(seed)
        for _ in range(40):
            n = int(rng.integers(1, 7))
            rows = tuple(
                int(rng.integers(0, 1 << (2 * n)))
                for _ in range(int(rng.integers(0, 2 * n + 3)))
            )
            m = GF2Matrix(rows, 2 * n)
            # Act
            dual = symplectic_dual(m)
            double = symplectic_dual(dual)
            # Assert
            assert rank(m) + dual.rank() == 2 * n
            assert double.rank() == rank(m)
            assert all(in_span(r, double) for r in m.rows)
            assert not any(
                symplectic_product(v, g)
                for v in dual.to_vectors()
                for g in m.to_vectors()
            )

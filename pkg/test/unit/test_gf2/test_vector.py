import numpy as np
import pytest

from orthocode.gf2.exceptions import DimensionException
from orthocode.gf2.vector import (
    BitStringException,
    SympVector,
    cyclic_shift,
    format_bits,
    parse_bits,
    quadratic_form,
    symplectic_product,
    symplectic_weight,
)


def _random_vector(rng, n):
    return SympVector(
        n, int(rng.integers(0, 1 << n)), int(rng.integers(0, 1 << n))
    )


def _random_triples(seed, count, max_n):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        yield tuple(_random_vector(rng, n) for _ in range(3))


class TestParseBits:

    @pytest.mark.parametrize(
        "text, expected", [("0", 0), ("1", 1), ("11000", 24), ("", 0)]
    )
    def test_reads_msb_first(self, text, expected):
        # Act
        value = parse_bits(text)
        # Assert
        assert value == expected

    def test_reports_column_of_bad_character(self):
        # Act
        with pytest.raises(BitStringException) as exc_info:
            parse_bits("1102", offset=3)
        # Assert
        assert exc_info.value.column == 7
        assert "column 7" in str(exc_info.value)

    def test_format_pads_to_width(self):
        # Act + Assert
        assert format_bits(3, 5) == "00011"
        assert format_bits(0, 0) == ""


class TestSympVector:

    def test_from_string_packs_leftmost_qubit_high(self):
        # Act
        v = SympVector.from_string("11000|00101")
        # Assert
        assert (v.n, v.a, v.b) == (5, 0b11000, 0b00101)
        assert v.row == (0b11000 << 5) | 0b00101

    def test_from_string_accepts_parentheses(self):
        # Act
        v = SympVector.from_string("(10001|01010)")
        # Assert
        assert str(v) == "10001|01010"

    @pytest.mark.parametrize("text", ["1100|001", "1100", "11|00|11", "1a|00"])
    def test_from_string_rejects_malformed(self, text):
        # Act + Assert
        with pytest.raises(BitStringException):
            SympVector.from_string(text)

    def test_rejects_out_of_range_halves(self):
        # Act + Assert
        with pytest.raises(DimensionException):
            SympVector(2, 0b100, 0)

    def test_add_is_xor(self):
        # Arrange
        u = SympVector.from_string("11000|00101")
        v = SympVector.from_string("01100|10010")
        # Act
        w = u + v
        # Assert
        assert str(w) == "10100|10111"
        assert w + v == u

    def test_add_rejects_other_lengths(self):
        # Act + Assert
        with pytest.raises(DimensionException):
            SympVector.zero(2) + SympVector.zero(3)

    def test_from_row_round_trips(self):
        # Arrange
        v = SympVector.from_string("10110|01101")
        # Act
        back = SympVector.from_row(v.row, 5)
        # Assert
        assert back == v

    def test_single_sets_one_qubit(self):
        # Act
        v = SympVector.single(4, 2, x=1, z=1)
        # Assert
        assert str(v) == "0010|0010"
        assert v.qubit(2) == (1, 1)
        assert v.qubit(0) == (0, 0)

    def test_bits_and_bool(self):
        # Arrange
        v = SympVector.from_bits([1, 0, 1], [0, 0, 1])
        # Assert
        assert v.a_bits == (1, 0, 1)
        assert v.b_bits == (0, 0, 1)
        assert v
        assert not SympVector.zero(3)


class TestForms:

    def test_generators_of_five_qubit_code_are_orthogonal(self):
        # Arrange
        rows = ["11000|00101", "01100|10010", "00110|01001", "00011|10100"]
        vectors = [SympVector.from_string(r) for r in rows]
        # Act
        products = [
            symplectic_product(u, v) for u in vectors for v in vectors
        ]
        # Assert
        assert not any(products)

    def test_x_and_z_on_same_qubit_anticommute(self):
        # Arrange
        x = SympVector.single(3, 1, 1, 0)
        z = SympVector.single(3, 1, 0, 1)
        # Act + Assert
        assert symplectic_product(x, z) == 1
        assert symplectic_product(z, x) == 1

    def test_form_is_alternating(self):
        # Arrange
        v = SympVector.from_string("10110|11010")
        # Act + Assert
        assert symplectic_product(v, v) == 0

    def test_quadratic_form_counts_xz_qubits(self):
        # Act + Assert
        assert quadratic_form(SympVector.from_string("11000|00101")) == 0
        assert quadratic_form(SympVector.from_string("10000|10000")) == 1
        assert quadratic_form(SympVector.from_string("11000|11000")) == 0

    def test_polarisation_of_quadratic_form(self):
        # Arrange
        u = SympVector.from_string("10100|01110")
        v = SympVector.from_string("01101|11000")
        # Act
        lhs = quadratic_form(u + v)
        rhs = (
            quadratic_form(u) + quadratic_form(v) + symplectic_product(u, v)
        ) % 2
        # Assert
        assert lhs == rhs

    def test_polarisation_on_random_vectors(self):
        # Act
        failures = [
            (u, v)
            for u, v, _ in _random_triples(11, 1000, 32)
            if quadratic_form(u + v)
            != (
                quadratic_form(u)
                + quadratic_form(v)
                + symplectic_product(u, v)
            )
            % 2
        ]
        # Assert
        assert failures == []

    def test_form_is_bilinear_symmetric_and_alternating(self):
        # Arrange
        triples = list(_random_triples(12, 1000, 32))
        # Act + Assert
        for u, v, w in triples:
            assert symplectic_product(u, v + w) == (
                (symplectic_product(u, v) + symplectic_product(u, w)) % 2
            )
            assert symplectic_product(u, v) == symplectic_product(v, u)
            assert symplectic_product(u, u) == 0

    def test_weight_counts_union_of_supports(self):
        # Act + Assert
        assert symplectic_weight(SympVector.from_string("00111|00101")) == 3
        assert symplectic_weight(SympVector.zero(4)) == 0


class TestCyclicShift:

    def test_shift_moves_qubit_right(self):
        # Arrange
        v = SympVector.from_string("11000|00101")
        # Act
        shifted = cyclic_shift(v)
        # Assert
        assert str(shifted) == "01100|10010"

    def test_full_rotation_is_identity(self):
        # Arrange
        v = SympVector.from_string("11010|00101")
        # Act + Assert
        assert cyclic_shift(v, 5) == v
        assert cyclic_shift(cyclic_shift(v, 2), -2) == v

    def test_positions_leave_other_qubits(self):
        # Arrange
        v = SympVector.from_string("01110100|00111010")
        # Act
        shifted = cyclic_shift(v, positions=range(1, 8))
        # Assert
        assert str(shifted) == "00111010|00011101"

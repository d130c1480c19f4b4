import pytest

from orthocode.codes.builtins import BuiltinCode, builtin, builtin_rows
from orthocode.codes.correctability import is_shift_invariant
from orthocode.codes.exceptions import UnknownCodeException
from orthocode.gf2.vector import SympVector


class TestBuiltin:

    @pytest.mark.parametrize(
        "name, n, k_bar",
        [("five_qubit", 5, 4), ("eight_qubit", 8, 5), ("ten_qubit", 10, 6)],
    )
    def test_parameters(self, name, n, k_bar):
        # Act
        code = builtin(name)
        # Assert
        assert (code.n, code.k_bar) == (n, k_bar)
        assert code.name == name

    def test_accepts_enum(self):
        # Act
        code = builtin(BuiltinCode.FIVE_QUBIT)
        # Assert
        assert str(code.generators[0]) == "11000|00101"

    def test_rows_as_tabulated(self):
        # Act
        rows = builtin_rows("eight_qubit")
        # Assert
        assert rows[-2:] == ("11111111|00000000", "00000000|11111111")

    def test_unknown_name(self):
        # Act
        with pytest.raises(UnknownCodeException) as exc_info:
            builtin("seven_qubit")
        # Assert
        assert "five_qubit" in str(exc_info.value)

    def test_five_qubit_dual_adds_all_x_and_all_z(self):
        # Arrange
        code = builtin("five_qubit")
        # Act + Assert
        assert code.in_dual(SympVector.from_string("11111|00000"))
        assert code.in_dual(SympVector.from_string("00000|11111"))

    def test_five_qubit_is_cyclic(self):
        # Act + Assert
        assert is_shift_invariant(builtin("five_qubit"))

    def test_eight_qubit_is_cyclic_on_last_seven(self):
        # Act + Assert
        assert is_shift_invariant(builtin("eight_qubit"), range(1, 8))

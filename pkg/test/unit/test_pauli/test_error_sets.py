from math import comb

import pytest

from orthocode.pauli.element import PhaseMode
from orthocode.pauli.error_sets import weight_t_error_set
from orthocode.pauli.exceptions import WeightRangeException


class TestWeightTErrorSet:

    @pytest.mark.parametrize("n, t", [(5, 0), (5, 1), (5, 2), (3, 3), (8, 2)])
    def test_size(self, n, t):
        # Arrange
        expected = sum(comb(n, w) * 3**w for w in range(t + 1))
        # Act
        errors = weight_t_error_set(n, t)
        # Assert
        assert len(errors) == expected

    def test_identity_first_and_weights_bounded(self):
        # Act
        errors = weight_t_error_set(5, 2)
        # Assert
        assert not errors[0].vector
        assert all(e.weight <= 2 for e in errors)
        assert [e.weight for e in errors] == sorted(e.weight for e in errors)

    def test_all_distinct_with_plus_phase(self):
        # Act
        errors = weight_t_error_set(4, 2)
        # Assert
        assert len({e.vector for e in errors}) == len(errors)
        assert all(e.phase == 0 for e in errors)

    def test_full_weight_covers_whole_space(self):
        # Act
        errors = weight_t_error_set(3, 3)
        # Assert
        assert len({e.vector.row for e in errors}) == 4**3

    def test_mode(self):
        # Act
        errors = weight_t_error_set(2, 1, PhaseMode.COMPLEX)
        # Assert
        assert all(e.mode is PhaseMode.COMPLEX for e in errors)

    @pytest.mark.parametrize("t", [-1, 6])
    def test_rejects_out_of_range(self, t):
        # Act + Assert
        with pytest.raises(WeightRangeException):
            weight_t_error_set(5, t)

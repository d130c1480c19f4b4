import numpy as np
import pytest

from orthocode.clifford.action import SympMatrix
from orthocode.clifford.suite import (
    EXHAUSTIVE_LIMIT,
    form_preservation_suite,
    quadratic_violation,
    random_invertible,
    random_symmetric,
)
from orthocode.gf2.matrix import GF2Matrix


class TestFormPreservationSuite:

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_passes(self, n):
        # Act
        result = form_preservation_suite(n, seed=7)
        # Assert
        assert result.passed
        assert len(result.entries) == n + 5

    def test_complex_identity_has_witness(self):
        # Act
        result = form_preservation_suite(1)
        # Assert
        entry = next(e for e in result.entries if e.name == "DP I")
        assert not entry.real
        assert entry.preserves_alternating
        assert not entry.preserves_quadratic
        assert str(entry.witness) == "1|0"
        assert entry.passed

    def test_real_generators_keep_quadratic_form(self):
        # Act
        result = form_preservation_suite(3, seed=1)
        # Assert
        for entry in result.entries:
            if entry.real:
                assert entry.preserves_quadratic
                assert entry.witness is None

    def test_report(self):
        # Act
        text = str(form_preservation_suite(2))
        # Assert
        lines = text.splitlines()
        assert lines[0] == "n=2"
        assert lines[1].startswith("H_ALL")
        assert lines[1].endswith("ok")
        assert "witness=" in lines[-1]

    def test_seed_is_reproducible(self):
        # Act + Assert
        assert form_preservation_suite(3, seed=5) == form_preservation_suite(
            3, seed=5
        )


class TestQuadraticViolation:

    def test_first_in_row_order(self):
        # Arrange
        g = SympMatrix(1, GF2Matrix.from_strings(["11", "01"]), real=False)
        # Act + Assert
        assert str(quadratic_violation(g)) == "1|0"

    def test_none_for_identity(self):
        # Act + Assert
        assert quadratic_violation(SympMatrix.identity(2)) is None

    def test_large_sizes_use_sparse_check(self, mocker):
        # Arrange
        g = SympMatrix.identity(EXHAUSTIVE_LIMIT + 1)
        spy = mocker.spy(SympMatrix, "quadratic_witness")
        # Act
        quadratic_violation(g)
        # Assert
        spy.assert_called_once()


class TestRandomMatrices:

    def test_invertible(self):
        # Arrange
        rng = np.random.default_rng(0)
        # Act
        m = random_invertible(4, rng)
        # Assert
        assert m.rank() == 4

    @pytest.mark.parametrize("zero_diagonal", [True, False])
    def test_symmetric(self, zero_diagonal):
        # Arrange
        rng = np.random.default_rng(0)
        # Act
        m = random_symmetric(5, rng, zero_diagonal)
        # Assert
        assert m.is_symmetric()
        if zero_diagonal:
            assert m.has_zero_diagonal()

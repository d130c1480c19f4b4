import logging

from orthocode.codes.builtins import builtin
from orthocode.codes.code import StabilizerCode
from orthocode.codes.distance import distance
from orthocode.codes.validation import validate
from orthocode.probes.probe import LOGGER_NAME


class TestDefaultProbeLogging:

    def test_distance_logs_start_and_finish(self, caplog):
        # Arrange
        caplog.set_level(logging.INFO, logger=LOGGER_NAME)
        # Act
        distance(builtin("five_qubit"))
        # Assert
        messages = [
            r.getMessage() for r in caplog.records if r.name == LOGGER_NAME
        ]
        assert messages[-2].startswith("Distance search: n=5, dim S-perp=6")
        assert messages[-1].startswith(
            "Distance search done: d_dual=3 d_dual_minus_S=3 after 63"
        )

    def test_budget_warning_passes_warning_level(self, caplog):
        # Arrange
        caplog.set_level(logging.WARNING, logger=LOGGER_NAME)
        # Act
        distance(builtin("five_qubit"), budget=10)
        # Assert
        assert [r.levelno for r in caplog.records] == [logging.WARNING]

    def test_invalid_code_warns(self, caplog):
        # Arrange
        caplog.set_level(logging.WARNING, logger=LOGGER_NAME)
        code = StabilizerCode.from_strings(["10|00", "00|10"])
        # Act
        validate(code, strict=False)
        # Assert
        assert caplog.records[0].getMessage() == (
            "Validated n=2 dim_S=2 strict=False: 1 violation(s)"
        )

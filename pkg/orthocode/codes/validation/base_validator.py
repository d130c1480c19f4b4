from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from orthocode.codes.code import StabilizerCode  # pragma: no cover
    from orthocode.codes.validation.report import (  # pragma: no cover
        ValidationReport,
    )


class BaseValidator(ABC):
    """
    Abstract base class for code validators in a chain of
    responsibility.

    Each validator checks one property of a :class:`StabilizerCode`,
    records what it finds on the shared :class:`ValidationReport`, and
    hands over to the next validator. Validators never raise on a bad
    code; the report carries every failure.

    Args:
        next_ (BaseValidator | None, optional): Validator run after
            this one. `None` ends the chain.

    Examples:
        >>> from orthocode.codes.code import StabilizerCode
        >>> from orthocode.codes.validation.report import ValidationReport
        >>>
        >>> class ExampleValidator(BaseValidator):
        ...     def validate(self, code, report) -> None:
        ...         print(f"Checked {len(code.generators)} generator(s)")
        ...         super().validate(code, report)
        ...
        >>> code = StabilizerCode.from_strings(["10|00"])
        >>> report = ValidationReport(code.n, code.k_bar, strict=False)
        >>> ExampleValidator(next_=ExampleValidator()).validate(code, report)
        Checked 1 generator(s)
        Checked 1 generator(s)
    """

    def __init__(self, next_: BaseValidator | None = None) -> None:
        self.next_ = next_

    @abstractmethod
    def validate(
        self, code: StabilizerCode, report: ValidationReport
    ) -> None:
        """Checks ``code``, appends violations to ``report`` and
        delegates to the next validator.

        Args:
            code (StabilizerCode): The code to check.
            report (ValidationReport): Collects the violations.
        """
        if self.next_:
            return self.next_.validate(code, report)
        return None

    def __repr__(self) -> str:
        """
        Examples:
            >>> class ExampleValidator(BaseValidator):
            ...     def validate(self, code, report) -> None:
            ...         pass
            ...
            >>> repr(ExampleValidator(next_=ExampleValidator()))
            'ExampleValidator(next_=ExampleValidator(next_=None))'
        """
        return f"{self.__class__.__name__}(next_={self.next_!r})"

    def __str__(self) -> str:
        return f"{self.__class__.__name__}"

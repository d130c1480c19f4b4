from __future__ import annotations

from collections.abc import Iterable, MutableSequence
from typing import TYPE_CHECKING, Any, overload

from orthocode.codes.exceptions import CodeException
from orthocode.codes.validation.base_validator import BaseValidator

if TYPE_CHECKING:
    from orthocode.codes.code import StabilizerCode  # pragma: no cover
    from orthocode.codes.validation.report import (  # pragma: no cover
        ValidationReport,
    )


class ValidationChainException(CodeException):
    """Base exception class for errors in building or running a
    validation chain.
    """


class InvalidLinkException(ValidationChainException):
    """Exception raised when something other than a validator is put
    into a chain.

    Args:
        link (Any): The rejected object.

    Examples:
        >>> from orthocode.codes.validation.chain import InvalidLinkException
        >>> try:
        ...     raise InvalidLinkException("not a validator")
        ... except InvalidLinkException as e:
        ...     print(f"Error: {e}")
        ...
        Error: Invalid link of type 'str', expected type 'BaseValidator'
    """

    def __init__(self, link: Any) -> None:
        self.link = link
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message naming the rejected type.
        """
        return (
            f"Invalid link of type '{type(self.link).__name__}', "
            f"expected type '{BaseValidator.__name__}'"
        )


class EmptyChainException(ValidationChainException):
    """Exception raised when an empty chain is asked to validate.

    Args:
        chain (ValidationChain): The empty chain.
    """

    def __init__(self, chain: ValidationChain) -> None:
        self.chain = chain
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message quoting the chain.
        """
        return f"Nothing to validate, no links added to chain '{self.chain!r}'"


class ValidationChain(MutableSequence[BaseValidator]):
    """An ordered chain of validators whose ``next_`` references are
    kept in step with the list.

    Examples:
        >>> from orthocode.codes.validation.validators import (
        ...     IndependenceValidator, OrthogonalityValidator
        ... )
        >>> chain = ValidationChain(
        ...     [OrthogonalityValidator(), IndependenceValidator()]
        ... )
        >>> chain[0]
        OrthogonalityValidator(next_=IndependenceValidator(next_=None))
    """

    def __init__(self, links: Iterable[BaseValidator] = ()) -> None:
        self._links: list[BaseValidator] = []
        self.extend(links)

    def _relink(self) -> None:
        for current, following in zip(self._links, self._links[1:]):
            current.next_ = following
        if self._links:
            self._links[-1].next_ = None

    @staticmethod
    def _check(link: Any) -> BaseValidator:
        if not isinstance(link, BaseValidator):
            raise InvalidLinkException(link)
        return link

    @overload
    def __getitem__(self, index: int) -> BaseValidator: ...

    @overload
    def __getitem__(self, index: slice) -> MutableSequence[BaseValidator]: ...

    def __getitem__(
        self, index: int | slice
    ) -> BaseValidator | MutableSequence[BaseValidator]:
        return self._links[index]

    @overload
    def __setitem__(self, index: int, value: BaseValidator) -> None: ...

    @overload
    def __setitem__(
        self, index: slice, value: Iterable[BaseValidator]
    ) -> None: ...

    def __setitem__(self, index: Any, value: Any) -> None:
        if isinstance(index, slice):
            self._links[index] = [self._check(v) for v in value]
        else:
            self._links[index] = self._check(value)
        self._relink()

    def __delitem__(self, index: int | slice) -> None:
        del self._links[index]
        self._relink()

    def __len__(self) -> int:
        return len(self._links)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ValidationChain):
            return False
        return self._links == other._links

    def insert(self, index: int, value: BaseValidator) -> None:
        self._links.insert(index, self._check(value))
        self._relink()

    def validate_chain(
        self, code: StabilizerCode, report: ValidationReport
    ) -> ValidationReport:
        """Runs the first validator, which passes the code down the
        chain.

        Raises:
            EmptyChainException: If the chain has no validators.
        """
        if not self._links:
            raise EmptyChainException(self)
        self._links[0].validate(code, report)
        return report

    def __repr__(self) -> str:
        names = ", ".join(str(v) for v in self._links)
        return f"{self.__class__.__name__}([{names}])"

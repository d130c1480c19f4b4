from __future__ import annotations

from collections.abc import Iterable

from orthocode.base_exc import OrthocodeException


class CodeException(OrthocodeException):
    """Base exception class for errors raised while building, reading
    or measuring stabilizer codes.
    """


class UnknownCodeException(CodeException):
    """Exception raised when a builtin code is requested by a name
    that does not exist.

    Args:
        name (str): The requested name.
        known (Iterable[str]): The names that exist.

    Examples:
        >>> from orthocode.codes.exceptions import UnknownCodeException
        >>> try:
        ...     raise UnknownCodeException("seven_qubit", ["five_qubit"])
        ... except UnknownCodeException as e:
        ...     print(f"Error: {e}")
        ...
        Error: Unknown code 'seven_qubit', expected one of: five_qubit
    """

    def __init__(self, name: str, known: Iterable[str]) -> None:
        self.name = name
        self.known = tuple(known)
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with the name and the valid choices.
        """
        return (
            f"Unknown code {self.name!r}, expected one of: "
            f"{', '.join(self.known)}"
        )


class CodeFormatException(CodeException):
    """Exception raised when a code file cannot be parsed.

    Args:
        line_no (int): 1-based line of the problem.
        column (int): 1-based column of the problem.
        reason (str): What was wrong.
        source (str): File name or ``"<string>"``.

    Examples:
        >>> from orthocode.codes.exceptions import CodeFormatException
        >>> try:
        ...     raise CodeFormatException(3, 7, "expected 0 or 1")
        ... except CodeFormatException as e:
        ...     print(f"Error: {e}")
        ...
        Error: <string>:3:7: expected 0 or 1
    """

    def __init__(
        self, line_no: int, column: int, reason: str, source: str = "<string>"
    ) -> None:
        self.line_no = line_no
        self.column = column
        self.reason = reason
        self.source = source
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: ``source:line:column: reason``.
        """
        return f"{self.source}:{self.line_no}:{self.column}: {self.reason}"


class CSSConstructionException(CodeException):
    """Exception raised when a classical code does not contain its own
    dual, so no CSS stabilizer can be formed from it.

    Args:
        witness (str): A vector of the dual that lies outside the code,
            as a bit string.
    """

    def __init__(self, witness: str) -> None:
        self.witness = witness
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message naming the witness vector.
        """
        return (
            f"Dual code is not contained in the code: {self.witness} lies "
            f"in the dual but not in the code"
        )


class QuadraticResidueException(CodeException):
    """Exception raised when the quadratic-residue construction gets a
    modulus that is not a prime congruent to 5 mod 8.

    Args:
        p (int): The supplied modulus.
        reason (str): Which requirement failed.
    """

    def __init__(self, p: int, reason: str) -> None:
        self.p = p
        self.reason = reason
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with the modulus and the failed requirement.
        """
        return (
            f"Quadratic-residue code needs a prime p = 5 mod 8: "
            f"p={self.p} {self.reason}"
        )


class InvalidCodeException(CodeException):
    """Exception raised when an operation needs a valid code and the
    validators report violations.

    Args:
        operation (str): The operation that was attempted.
        violations (Iterable[str]): Rendered violations.
    """

    def __init__(self, operation: str, violations: Iterable[str]) -> None:
        self.operation = operation
        self.violations = tuple(violations)
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with the operation and the first violations.
        """
        shown = "; ".join(self.violations[:3])
        more = len(self.violations) - 3
        suffix = f" (+{more} more)" if more > 0 else ""
        return f"{self.operation} requires a valid code: {shown}{suffix}"


class SearchSpaceTooLargeException(CodeException):
    """Exception raised when an exhaustive distance search is asked to
    enumerate more vectors than it allows without a scan budget.

    Args:
        dimension (int): Dimension of the space to enumerate.
        limit (int): Largest dimension searched without a budget.
    """

    def __init__(self, dimension: int, limit: int) -> None:
        self.dimension = dimension
        self.limit = limit
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with both dimensions and the remedy.
        """
        return (
            f"Cannot enumerate 2^{self.dimension} vectors (limit "
            f"2^{self.limit}); pass a scan budget"
        )


class RateDomainException(CodeException):
    """Exception raised when the rate formula is evaluated outside
    ``0 <= delta < 1/4``.

    Args:
        delta (float): The supplied error fraction.
    """

    def __init__(self, delta: float) -> None:
        self.delta = delta
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with the value and the valid interval.
        """
        return f"delta={self.delta} outside the interval [0, 0.25)"

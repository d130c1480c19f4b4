from __future__ import annotations

from orthocode.base_exc import OrthocodeException


class StateVectorException(OrthocodeException):
    """Base exception class for errors raised by the dense state
    vector layer.
    """


class StateSizeException(StateVectorException):
    """Exception raised when a dense simulation is requested on more
    qubits than it supports.

    Args:
        n (int): Requested qubit count.
        limit (int): Largest supported qubit count.

    Examples:
        >>> from orthocode.statevector.exceptions import StateSizeException
        >>> try:
        ...     raise StateSizeException(13, 12)
        ... except StateSizeException as e:
        ...     print(f"Error: {e}")
        ...
        Error: Dense simulation supports at most 12 qubits, got 13
    """

    def __init__(self, n: int, limit: int) -> None:
        self.n = n
        self.limit = limit
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with the request and the limit.
        """
        return (
            f"Dense simulation supports at most {self.limit} qubits, "
            f"got {self.n}"
        )


class ConsistencyException(StateVectorException):
    """Exception raised when a computed space does not have the
    dimension the algebra guarantees.

    Args:
        expected (int): Dimension required by the code parameters.
        actual (int): Dimension obtained.
    """

    def __init__(self, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with both dimensions.
        """
        return (
            f"Codespace has dimension {self.actual}, expected "
            f"{self.expected}"
        )


class CodewordFormatException(StateVectorException):
    """Exception raised when a codeword listing cannot be read or a
    state cannot be written as one.

    Args:
        reason (str): What was wrong.
        token (str | None): The offending term, if any.
    """

    def __init__(self, reason: str, token: str | None = None) -> None:
        self.reason = reason
        self.token = token
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: The reason, quoting the term when known.
        """
        if self.token is None:
            return self.reason
        return f"{self.reason}: {self.token!r}"

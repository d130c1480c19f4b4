from __future__ import annotations

from orthocode.base_exc import OrthocodeException


class CliffordException(OrthocodeException):
    """Base exception class for errors raised while building or
    combining Clifford actions on the binary space.
    """


class NonSymmetricMatrixException(CliffordException):
    # pylint: disable=line-too-long
    """Exception raised when a diagonal generator gets a matrix that
    is not symmetric, or has ones on the diagonal where the real group
    forbids them.

    Args:
        generator (str): The generator being built.
        reason (str): Which property failed.

    Examples:
        >>> from orthocode.clifford.exceptions import NonSymmetricMatrixException
        >>> try:
        ...     raise NonSymmetricMatrixException("DM", "nonzero diagonal")
        ... except NonSymmetricMatrixException as e:
        ...     print(f"Error: {e}")
        ...
        Error: DM requires a symmetric matrix: nonzero diagonal
    """

    def __init__(self, generator: str, reason: str) -> None:
        self.generator = generator
        self.reason = reason
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message naming the generator and the failed property.
        """
        return f"{self.generator} requires a symmetric matrix: {self.reason}"


class QubitIndexException(CliffordException):
    """Exception raised when a single-qubit generator names a qubit
    outside ``1..n``.

    Args:
        n (int): Qubit count.
        qubit (int): The requested 1-based index.
    """

    def __init__(self, n: int, qubit: int) -> None:
        self.n = n
        self.qubit = qubit
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with the index and the valid range.
        """
        return f"Qubit index {self.qubit} outside 1..{self.n}"


class WordFormatException(CliffordException):
    """Exception raised when a serialised generator word cannot be
    read.

    Args:
        line_no (int): 1-based line number.
        line (str): The offending line.
        reason (str): What was wrong.
    """

    def __init__(self, line_no: int, line: str, reason: str) -> None:
        self.line_no = line_no
        self.line = line
        self.reason = reason
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with line number, text and reason.
        """
        return f"Line {self.line_no}: {self.reason}: {self.line!r}"

from __future__ import annotations

from orthocode.base_exc import OrthocodeException


class GF2Exception(OrthocodeException):
    """Base exception class for errors raised by the binary linear
    algebra layer.
    """


class DimensionException(GF2Exception):
    """Exception raised when two operands do not share a dimension.

    Args:
        operation (str): Name of the operation that was attempted.
        expected (int): The dimension the operation required.
        actual (int): The dimension that was supplied.

    Examples:
        >>> from orthocode.gf2.exceptions import DimensionException
        >>> try:
        ...     raise DimensionException("symplectic_product", 5, 4)
        ... except DimensionException as e:
        ...     print(f"Error: {e}")
        ...
        Error: symplectic_product expects dimension 5, but got: 4
    """

    def __init__(self, operation: str, expected: int, actual: int) -> None:
        self.operation = operation
        self.expected = expected
        self.actual = actual
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message naming the operation and both dimensions.
        """
        return (
            f"{self.operation} expects dimension {self.expected}, "
            f"but got: {self.actual}"
        )


class SingularMatrixException(GF2Exception):
    """Exception raised when an invertible binary matrix is required
    but the supplied matrix is singular.

    Args:
        rank (int): Rank of the supplied matrix.
        size (int): Number of rows of the square matrix.
    """

    def __init__(self, rank: int, size: int) -> None:
        self.rank = rank
        self.size = size
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message stating the rank deficit.
        """
        return (
            f"Matrix of size {self.size}x{self.size} is singular over "
            f"GF(2): rank {self.rank}"
        )

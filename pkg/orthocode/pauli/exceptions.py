from __future__ import annotations

from orthocode.base_exc import OrthocodeException


class PauliException(OrthocodeException):
    """Base exception class for errors raised by Pauli group
    arithmetic.
    """


class PauliModeException(PauliException):
    """Exception raised when elements of the real group and of its
    complex extension are mixed, or a real element is given a phase
    that only exists in the complex extension.

    Args:
        detail (str): What was mixed up.

    Examples:
        >>> from orthocode.pauli.exceptions import PauliModeException
        >>> try:
        ...     raise PauliModeException("cannot multiply real by complex")
        ... except PauliModeException as e:
        ...     print(f"Error: {e}")
        ...
        Error: Phase mode mismatch: cannot multiply real by complex
    """

    def __init__(self, detail: str) -> None:
        self.detail = detail
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with the mismatch detail.
        """
        return f"Phase mode mismatch: {self.detail}"


class PauliParseException(PauliException):
    """Exception raised when the text form ``±X(bits)Z(bits)`` cannot
    be parsed.

    Args:
        text (str): The offending text.
    """

    def __init__(self, text: str) -> None:
        self.text = text
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message quoting the text and the accepted grammar.
        """
        return (
            f"Cannot parse Pauli element {self.text!r}: expected "
            f"'[+|-][i·]X(<bits>)Z(<bits>)'"
        )


class WeightRangeException(PauliException):
    """Exception raised when an error set is requested with a weight
    bound outside ``0..n``.

    Args:
        n (int): Qubit count.
        t (int): Requested weight bound.
    """

    def __init__(self, n: int, t: int) -> None:
        self.n = n
        self.t = t
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with both values.
        """
        return f"Weight bound t={self.t} must lie in 0..{self.n}"

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

from orthocode.gf2.exceptions import DimensionException, GF2Exception


class BitStringException(GF2Exception):
    """Exception raised when a textual bit vector cannot be parsed.

    Args:
        text (str): The offending text.
        column (int): 1-based column of the first bad character.
        reason (str): What was wrong at that column.

    Examples:
        >>> from orthocode.gf2.vector import BitStringException
        >>> try:
        ...     raise BitStringException("1102|0000", 4, "expected 0 or 1")
        ... except BitStringException as e:
        ...     print(f"Error: {e}")
        ...
        Error: Cannot parse '1102|0000' at column 4: expected 0 or 1
    """

    def __init__(self, text: str, column: int, reason: str) -> None:
        self.text = text
        self.column = column
        self.reason = reason
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: Message with the text, column and reason.
        """
        return (
            f"Cannot parse {self.text!r} at column {self.column}: "
            f"{self.reason}"
        )


_BITS = re.compile(r"[01]*")


def parse_bits(text: str, offset: int = 0) -> int:
    """Reads a string of ``0``/``1`` characters as an integer whose
    most significant bit is the leftmost character.

    Args:
        text (str): The bit string.
        offset (int): Column offset used in error messages.

    Returns:
        int: The packed value.

    Raises:
        BitStringException: If a character other than 0 or 1 occurs.

    Examples:
        >>> parse_bits("11000")
        24
        >>> parse_bits("")
        0
    """
    match = _BITS.match(text)
    end = match.end() if match else 0
    if end != len(text):
        raise BitStringException(text, offset + end + 1, "expected 0 or 1")
    return int(text, 2) if text else 0


def format_bits(value: int, width: int) -> str:
    """Renders the lowest ``width`` bits of ``value`` most significant
    bit first.

    Examples:
        >>> format_bits(24, 5)
        '11000'
    """
    return format(value, f"0{width}b") if width else ""


@dataclass(frozen=True, slots=True)
class SympVector:
    # pylint: disable=line-too-long
    """A vector ``(a|b)`` of the binary space of dimension ``2n``.

    The ``a`` half records bit flips and the ``b`` half phase flips.
    Both halves are packed into Python integers with qubit ``j``
    (numbered from 0, left to right as printed) at bit ``n - 1 - j``,
    so the printed string ``11000`` is the integer ``0b11000``. This
    keeps tables copied from print readable in tests and makes the
    packed ``a`` equal to the basis label used by state vectors.

    Args:
        n (int): Number of qubits.
        a (int): Packed X part.
        b (int): Packed Z part.

    Examples:
        >>> v = SympVector.from_string("11000|00101")
        >>> v
        SympVector('11000|00101')
        >>> v.weight
        4
        >>> str(v + SympVector.from_string("01100|10010"))
        '10100|10111'
    """

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionException("SympVector", 1, self.n)
        limit = 1 << self.n
        if not 0 <= self.a < limit or not 0 <= self.b < limit:
            raise DimensionException(
                "SympVector", self.n, max(self.a, self.b).bit_length()
            )

    @classmethod
    def zero(cls, n: int) -> SympVector:
        """The zero vector on ``n`` qubits."""
        return cls(n, 0, 0)

    @classmethod
    def from_string(cls, text: str) -> SympVector:
        """Parses ``"a|b"`` (optionally wrapped in parentheses).

        Raises:
            BitStringException: If the text is malformed or the two
                halves differ in length.
            DimensionException: If both halves are empty.

        Examples:
            >>> SympVector.from_string("(10001|01010)")
            SympVector('10001|01010')
        """
        body = text.strip()
        start = 0
        if body.startswith("(") and body.endswith(")"):
            body, start = body[1:-1], 1
        if body.count("|") != 1:
            raise BitStringException(text, start + 1, "expected one '|'")
        left, right = body.split("|")
        if len(left) != len(right):
            raise BitStringException(
                text, start + len(left) + 1, "halves differ in length"
            )
        a = parse_bits(left, start)
        b = parse_bits(right, start + len(left) + 1)
        return cls(len(left), a, b)

    @classmethod
    def from_bits(cls, a: Sequence[int], b: Sequence[int]) -> SympVector:
        """Builds a vector from two equal-length 0/1 sequences."""
        if len(a) != len(b):
            raise DimensionException("SympVector.from_bits", len(a), len(b))
        return cls(
            len(a),
            int("".join(str(int(x) & 1) for x in a) or "0", 2),
            int("".join(str(int(x) & 1) for x in b) or "0", 2),
        )

    @classmethod
    def from_row(cls, row: int, n: int) -> SympVector:
        """Splits a ``2n``-bit row (``a`` in the high half) into a
        vector."""
        return cls(n, row >> n, row & ((1 << n) - 1))

    @classmethod
    def single(cls, n: int, qubit: int, x: int, z: int) -> SympVector:
        """Vector acting on one qubit (0-based) with the given X and Z
        bits."""
        if not 0 <= qubit < n:
            raise DimensionException("SympVector.single", n, qubit)
        bit = 1 << (n - 1 - qubit)
        return cls(n, bit if x else 0, bit if z else 0)

    @property
    def row(self) -> int:
        """The vector as one ``2n``-bit row, ``a`` in the high half."""
        return (self.a << self.n) | self.b

    @property
    def weight(self) -> int:
        """Symplectic weight, see :func:`symplectic_weight`."""
        return (self.a | self.b).bit_count()

    @property
    def a_bits(self) -> tuple[int, ...]:
        return tuple(int(c) for c in format_bits(self.a, self.n))

    @property
    def b_bits(self) -> tuple[int, ...]:
        return tuple(int(c) for c in format_bits(self.b, self.n))

    def qubit(self, j: int) -> tuple[int, int]:
        """The ``(a_j, b_j)`` pair for qubit ``j`` (0-based)."""
        shift = self.n - 1 - j
        return (self.a >> shift) & 1, (self.b >> shift) & 1

    def _check(self, other: SympVector, operation: str) -> None:
        if self.n != other.n:
            raise DimensionException(operation, self.n, other.n)

    def __add__(self, other: Any) -> SympVector:
        if not isinstance(other, SympVector):
            return NotImplemented
        self._check(other, "SympVector.__add__")
        return SympVector(self.n, self.a ^ other.a, self.b ^ other.b)

    __xor__ = __add__

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __str__(self) -> str:
        return f"{format_bits(self.a, self.n)}|{format_bits(self.b, self.n)}"

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({str(self)!r})"


def symplectic_product(u: SympVector, v: SympVector) -> int:
    """The alternating form ``a·b′ + a′·b`` mod 2.

    Raises:
        DimensionException: If the qubit counts differ.

    Examples:
        >>> u = SympVector.from_string("11000|00101")
        >>> symplectic_product(u, SympVector.from_string("01100|10010"))
        0
        >>> x = SympVector.from_string("10000|00000")
        >>> symplectic_product(x, SympVector.from_string("00000|10000"))
        1
    """
    if u.n != v.n:
        raise DimensionException("symplectic_product", u.n, v.n)
    return ((u.a & v.b).bit_count() + (v.a & u.b).bit_count()) & 1


def quadratic_form(v: SympVector) -> int:
    """``Q(a|b) = Σ a_j b_j`` mod 2: the parity of qubits carrying
    ``σ_xσ_z``.

    Examples:
        >>> quadratic_form(SympVector.from_string("10000|10000"))
        1
    """
    return (v.a & v.b).bit_count() & 1


def symplectic_weight(v: SympVector) -> int:
    """Number of qubits on which ``v`` acts, ``popcount(a OR b)``.

    Examples:
        >>> symplectic_weight(SympVector.from_string("00111|00101"))
        3
    """
    return v.weight


def _rotate(value: int, width: int, k: int) -> int:
    k %= width
    if not k:
        return value
    mask = (1 << width) - 1
    return ((value >> k) | (value << (width - k))) & mask


def cyclic_shift(
    v: SympVector, k: int = 1, positions: Iterable[int] | None = None
) -> SympVector:
    """Rotates both halves ``k`` places to the right as printed, so
    qubit ``j`` moves to ``j + k``.

    With ``positions`` only those qubits (0-based, in order) rotate
    among themselves and the remaining qubits stay put.

    Examples:
        >>> str(cyclic_shift(SympVector.from_string("11000|00101")))
        '01100|10010'
        >>> v = SympVector.from_string("01110100|00111010")
        >>> str(cyclic_shift(v, positions=range(1, 8)))
        '00111010|00011101'
    """
    if positions is None:
        return SympVector(v.n, _rotate(v.a, v.n, k), _rotate(v.b, v.n, k))
    order = list(positions)
    a_bits, b_bits = list(v.a_bits), list(v.b_bits)
    new_a, new_b = a_bits[:], b_bits[:]
    for idx, src in enumerate(order):
        dst = order[(idx + k) % len(order)]
        new_a[dst], new_b[dst] = a_bits[src], b_bits[src]
    return SympVector.from_bits(new_a, new_b)

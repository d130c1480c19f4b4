from __future__ import annotations

from enum import Enum

from orthocode.codes.code import StabilizerCode
from orthocode.codes.exceptions import UnknownCodeException


class BuiltinCode(str, Enum):
    FIVE_QUBIT = "five_qubit"
    EIGHT_QUBIT = "eight_qubit"
    TEN_QUBIT = "ten_qubit"


# Generator rows exactly as tabulated for each code.
_TABLES: dict[BuiltinCode, tuple[str, ...]] = {
    # cyclic: every row is the previous one shifted right
    BuiltinCode.FIVE_QUBIT: (
        "11000|00101",
        "01100|10010",
        "00110|01001",
        "00011|10100",
    ),
    # [[8,3,3]]: Hamming [8,4,4] modified, cyclic on the last 7 qubits
    BuiltinCode.EIGHT_QUBIT: (
        "01110100|00111010",
        "00111010|00011101",
        "00011101|01001110",
        "11111111|00000000",
        "00000000|11111111",
    ),
    # [[10,4,3]]: two interleaved copies of the 5-qubit generators
    BuiltinCode.TEN_QUBIT: (
        "0110011110|1001001100",
        "0011001111|0100100110",
        "0001110111|1010000011",
        "1000111011|0101010001",
        "1111111111|0000000000",
        "0000000000|1111111111",
    ),
}


def builtin_rows(name: BuiltinCode | str) -> tuple[str, ...]:
    return _TABLES[_lookup(name)]


def _lookup(name: BuiltinCode | str) -> BuiltinCode:
    try:
        return BuiltinCode(name)
    except ValueError as e:
        raise UnknownCodeException(
            str(name), (c.value for c in BuiltinCode)
        ) from e


def builtin(name: BuiltinCode | str) -> StabilizerCode:
    """One of the tabulated codes, all signs ``+1``.

    Raises:
        UnknownCodeException: If ``name`` is not a :class:`BuiltinCode`.

    Examples:
        >>> code = builtin("eight_qubit")
        >>> code.n, len(code.generators), code.encoded_qubits
        (8, 5, 3)
    """
    key = _lookup(name)
    return StabilizerCode.from_strings(_TABLES[key], name=key.value)

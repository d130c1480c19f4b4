from __future__ import annotations

from collections.abc import Iterable

from orthocode.clifford.action import Gate, GateKind, SympMatrix
from orthocode.clifford.exceptions import WordFormatException
from orthocode.clifford.generators import realize
from orthocode.gf2.exceptions import GF2Exception
from orthocode.gf2.matrix import GF2Matrix


def format_word(word: Iterable[Gate]) -> str:
    # pylint: disable=line-too-long
    """One line per generator, first applied first.

    Examples:
        >>> from orthocode.clifford.generators import hadamard_all, hadamard_single
        >>> print(format_word((hadamard_all(3) @ hadamard_single(3, 2)).word))
        H_ALL
        H 2
    """
    return "\n".join(str(g) for g in word)


def _parse_line(line_no: int, line: str) -> Gate:
    head, *args = line.split()
    try:
        kind = GateKind(head)
    except ValueError as e:
        raise WordFormatException(line_no, line, "unknown generator") from e
    if kind is GateKind.H_ALL:
        if args:
            raise WordFormatException(line_no, line, "unexpected argument")
        return Gate(kind)
    if kind is GateKind.H:
        if len(args) != 1 or not args[0].isdigit():
            raise WordFormatException(line_no, line, "expected a qubit")
        return Gate(kind, qubit=int(args[0]))
    if not args:
        raise WordFormatException(line_no, line, "missing matrix rows")
    try:
        matrix = GF2Matrix.from_strings(args)
    except GF2Exception as e:
        raise WordFormatException(line_no, line, e.args[0]) from e
    if matrix.nrows != matrix.ncols:
        raise WordFormatException(line_no, line, "matrix is not square")
    return Gate(kind, matrix=matrix)


def parse_word(text: str) -> tuple[Gate, ...]:
    """Reads the output of :func:`format_word`; blank lines and ``#``
    comments are skipped.

    Raises:
        WordFormatException: On an unknown generator or bad arguments.

    Examples:
        >>> [str(g) for g in parse_word("H 3\\nGL 11 01")]
        ['H 3', 'GL 11 01']
    """
    gates = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            gates.append(_parse_line(line_no, line))
    return tuple(gates)


def word_matrix(word: Iterable[Gate], n: int) -> SympMatrix:
    """Multiplies the generator actions of ``word`` in order."""
    out = SympMatrix.identity(n)
    for gate in word:
        out = out @ realize(gate, n)
    return out

"""Reading and writing the plain-text code file format.

A file holds an optional ``n=<int>`` header and one generator per
line as ``<a-bits>|<b-bits>``; a leading ``-`` gives the generator the
sign ``-1`` and ``#`` starts a comment::

    # five-qubit code
    n=5
    11000|00101
    01100|10010
"""

from __future__ import annotations

import re
from pathlib import Path

from orthocode.codes.code import StabilizerCode
from orthocode.codes.exceptions import CodeFormatException
from orthocode.gf2.exceptions import DimensionException
from orthocode.gf2.matrix import GF2Matrix
from orthocode.gf2.vector import BitStringException, SympVector, parse_bits

_HEADER = re.compile(r"^n\s*=\s*(?P<n>\S*)$")


def _strip(raw: str) -> tuple[str, int]:
    """Line without its comment, and the column offset of its first
    character."""
    body = raw.split("#", 1)[0].rstrip()
    stripped = body.lstrip()
    return stripped, len(body) - len(stripped)


def parse_code(
    text: str, source: str = "<string>", name: str = ""
) -> StabilizerCode:
    # pylint: disable=line-too-long
    """Builds a code from the file format.

    Raises:
        CodeFormatException: With line and column of the first error.

    Examples:
        >>> code = parse_code("n=2\\n-10|00\\n")
        >>> code.signs
        (-1,)
        >>> parse_code("n=2\\n1x|00")
        Traceback (most recent call last):
        ...
        orthocode.codes.exceptions.CodeFormatException: <string>:2:2: expected 0 or 1
    """
    n: int | None = None
    generators: list[SympVector] = []
    signs: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line, offset = _strip(raw)
        if not line:
            continue
        header = _HEADER.match(line)
        if header:
            if n is not None or generators:
                raise CodeFormatException(
                    line_no, offset + 1, "header must come first", source
                )
            if not header["n"].isdigit() or int(header["n"]) < 1:
                raise CodeFormatException(
                    line_no,
                    offset + 3,
                    "n must be a positive integer",
                    source,
                )
            n = int(header["n"])
            continue
        sign = -1 if line[0] == "-" else 1
        if line[0] in "+-":
            line, offset = line[1:], offset + 1
        try:
            vector = SympVector.from_string(line)
        except BitStringException as e:
            raise CodeFormatException(
                line_no, offset + e.column, e.reason, source
            ) from e
        except DimensionException as e:
            raise CodeFormatException(
                line_no, offset + 1, "empty generator", source
            ) from e
        if n is None:
            n = vector.n
        if vector.n != n:
            raise CodeFormatException(
                line_no,
                offset + 1,
                f"expected {n} qubit(s), got {vector.n}",
                source,
            )
        generators.append(vector)
        signs.append(sign)
    if n is None:
        raise CodeFormatException(
            1, 1, "no generators and no n= header", source
        )
    return StabilizerCode(n, tuple(generators), tuple(signs), name)


def format_code(code: StabilizerCode) -> str:
    """Renders ``code`` in the file format; :func:`parse_code` reads
    it back unchanged.

    Examples:
        >>> print(format_code(StabilizerCode.from_strings(["11|00"], [-1])))
        n=2
        -11|00
        <BLANKLINE>
    """
    lines = [f"# {code.name}"] if code.name else []
    lines.append(f"n={code.n}")
    lines += [
        f"{'-' if s < 0 else ''}{g}"
        for g, s in zip(code.generators, code.signs)
    ]
    return "\n".join(lines) + "\n"


def read_code(path: str | Path) -> StabilizerCode:
    path = Path(path)
    return parse_code(
        path.read_text(encoding="utf-8"), str(path), name=path.stem
    )


def write_code(code: StabilizerCode, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(format_code(code), encoding="utf-8")
    return path


def parse_classical(text: str, source: str = "<string>") -> GF2Matrix:
    """Reads a classical generator (or parity check) matrix, one row
    of bits per line; ``#`` comments and blank lines are skipped."""
    rows: list[int] = []
    width: int | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line, offset = _strip(raw)
        if not line:
            continue
        compact = line.replace(" ", "")
        try:
            value = parse_bits(compact)
        except BitStringException as e:
            raise CodeFormatException(
                line_no, offset + e.column, e.reason, source
            ) from e
        if width is None:
            width = len(compact)
        if len(compact) != width:
            raise CodeFormatException(
                line_no,
                offset + 1,
                f"expected {width} bit(s), got {len(compact)}",
                source,
            )
        rows.append(value)
    if width is None:
        raise CodeFormatException(1, 1, "empty matrix", source)
    return GF2Matrix(tuple(rows), width)


def read_classical(path: str | Path) -> GF2Matrix:
    path = Path(path)
    return parse_classical(path.read_text(encoding="utf-8"), str(path))

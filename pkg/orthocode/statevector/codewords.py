"""The codeword dump format: one ``±<bits>`` term per basis state in
the support, the way the five-qubit codewords are usually listed.

Terms carry a sign and optionally an ``i`` (``+i01101``); all terms of
one state share a magnitude, so the listing is the state up to
normalisation.
"""

from __future__ import annotations

import re

import numpy as np

from orthocode.gf2.vector import format_bits
from orthocode.statevector.exceptions import CodewordFormatException
from orthocode.statevector.state import StateVector

_TERM = re.compile(r"^(?P<sign>[+-])(?P<imag>i)?(?P<bits>[01]+)$")

_PREFIX = {1: "+", -1: "-", 1j: "+i", -1j: "-i"}

FIVE_QUBIT_CODEWORDS: tuple[str, str] = (
    "+00000 +11000 +01100 +00110 +00011 +10001 -10100 -01010 "
    "-00101 -10010 -01001 -11110 -01111 -10111 -11011 -11101",
    "+11111 +00111 +10011 +11001 +11100 +01110 -01011 -10101 "
    "-11010 -01101 -10110 -00001 -10000 -01000 -00100 -00010",
)


def parse_terms(text: str, n: int | None = None) -> StateVector:
    """Reads whitespace-separated terms into a normalised state.

    Raises:
        CodewordFormatException: On a malformed or repeated term, terms
            of mixed length, or an empty listing.

    Examples:
        >>> psi = parse_terms("+00 -11")
        >>> [round(float(x.real), 4) for x in psi.amplitudes]
        [0.7071, 0.0, 0.0, -0.7071]
    """
    tokens = text.split()
    if not tokens:
        raise CodewordFormatException("empty codeword listing")
    width = n
    terms: dict[int, complex] = {}
    for token in tokens:
        match = _TERM.match(token)
        if match is None:
            raise CodewordFormatException("malformed term", token)
        bits = match["bits"]
        if width is None:
            width = len(bits)
        if len(bits) != width:
            raise CodewordFormatException(
                f"expected {width} qubit(s)", token
            )
        label = int(bits, 2)
        if label in terms:
            raise CodewordFormatException("repeated basis state", token)
        coefficient = 1j if match["imag"] else 1.0
        terms[label] = coefficient * (-1 if match["sign"] == "-" else 1)
    assert width is not None
    amplitudes = np.zeros(1 << width, dtype=np.complex128)
    for label, coefficient in terms.items():
        amplitudes[label] = coefficient
    return StateVector(width, amplitudes).normalized()


def format_terms(psi: StateVector, atol: float = 1e-9) -> list[str]:
    """The terms of ``psi`` in increasing label order.

    The global phase is fixed first so the lowest label in the support
    gets ``+``.

    Raises:
        CodewordFormatException: If the support amplitudes differ in
            magnitude or are not ``±1``/``±i`` multiples of each other.
    """
    amps = psi.amplitudes
    support = np.flatnonzero(np.abs(amps) > atol)
    if not support.size:
        raise CodewordFormatException("the zero vector has no terms")
    ratios = amps[support] / amps[support[0]]
    out = []
    for label, ratio in zip(support, ratios):
        prefix = next(
            (p for z, p in _PREFIX.items() if abs(ratio - z) <= atol), None
        )
        if prefix is None:
            raise CodewordFormatException(
                "amplitudes are not unit multiples of one another",
                format_bits(int(label), psi.n),
            )
        out.append(prefix + format_bits(int(label), psi.n))
    return out


def five_qubit_codewords() -> tuple[StateVector, StateVector]:
    """The two printed five-qubit codewords, normalised."""
    c0, c1 = (parse_terms(text) for text in FIVE_QUBIT_CODEWORDS)
    return c0, c1

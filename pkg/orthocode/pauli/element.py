from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Any

from orthocode.gf2.exceptions import DimensionException
from orthocode.gf2.vector import (
    SympVector,
    format_bits,
    quadratic_form,
    symplectic_product,
)
from orthocode.pauli.exceptions import (
    PauliModeException,
    PauliParseException,
)


class PhaseMode(str, Enum):
    """Which group an element lives in.

    ``REAL`` is the extraspecial group of signed real operators
    ``±X(a)Z(b)``; ``COMPLEX`` adds ``i·I`` and allows the phases
    ``{1, i, -1, -i}``.
    """

    REAL = "real"
    COMPLEX = "complex"


_SIGNS = {0: "+", 1: "+i·", 2: "-", 3: "-i·"}
_GRAMMAR = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*(?P<imag>i\s*[·*]\s*)?"
    r"X\((?P<a>[01]*)\)\s*Z\((?P<b>[01]*)\)\s*$"
)


@dataclass(frozen=True, slots=True)
class PauliElement:
    # pylint: disable=line-too-long
    """An element ``i^phase · X(a)Z(b)`` in normal form.

    ``phase`` is an exponent of ``i`` modulo 4. Real elements only use
    the even exponents, so ``phase=2`` is the ``(-I)`` factor of the
    normal form ``X(a)Z(b)(-I)^λ``.

    ``σ_y`` in this package means the real product ``σ_xσ_z`` (a
    qubit with both ``a_j`` and ``b_j`` set), not the Hermitian Pauli
    matrix, which equals ``i·σ_xσ_z``.

    Args:
        vector (SympVector): The image ``(a|b)`` in the binary space.
        phase (int): Exponent of ``i``, reduced modulo 4.
        mode (PhaseMode): Real group or its complex extension.

    Raises:
        PauliModeException: If a real element gets an odd phase.

    Examples:
        >>> e1 = PauliElement.from_string("X(10)Z(01)")
        >>> e2 = PauliElement.from_string("X(01)Z(00)")
        >>> print(e1 * e2)
        -X(11)Z(01)
        >>> print(e2 * e1)
        +X(11)Z(01)
        >>> print(PauliElement.from_string("X(1)Z(1)").square())
        -X(0)Z(0)
    """

    vector: SympVector
    phase: int = 0
    mode: PhaseMode = PhaseMode.REAL

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase", self.phase % 4)
        object.__setattr__(self, "mode", PhaseMode(self.mode))
        if self.mode is PhaseMode.REAL and self.phase % 2:
            raise PauliModeException(
                "real elements carry only the phases +1 and -1"
            )

    @classmethod
    def identity(
        cls, n: int, mode: PhaseMode = PhaseMode.REAL
    ) -> PauliElement:
        return cls(SympVector.zero(n), 0, mode)

    @classmethod
    def from_vector(
        cls,
        vector: SympVector,
        sign: int = 1,
        mode: PhaseMode = PhaseMode.REAL,
    ) -> PauliElement:
        """``±X(a)Z(b)`` from a vector and a ``±1`` sign."""
        return cls(vector, 0 if sign > 0 else 2, mode)

    @classmethod
    def from_string(
        cls, text: str, mode: PhaseMode | None = None
    ) -> PauliElement:
        """Parses ``[+|-][i·]X(<bits>)Z(<bits>)``.

        An ``i`` factor forces complex mode; otherwise ``mode``
        applies (real by default).

        Raises:
            PauliParseException: If the text does not match.

        Examples:
            >>> PauliElement.from_string("-i·X(1)Z(0)")
            PauliElement('-i·X(1)Z(0)')
        """
        match = _GRAMMAR.match(text)
        if match is None or len(match["a"]) != len(match["b"]):
            raise PauliParseException(text)
        if not match["a"]:
            raise PauliParseException(text)
        vector = SympVector.from_string(f"{match['a']}|{match['b']}")
        phase = (2 if match["sign"] == "-" else 0) + bool(match["imag"])
        if match["imag"]:
            mode = PhaseMode.COMPLEX
        return cls(vector, phase, mode or PhaseMode.REAL)

    @property
    def n(self) -> int:
        return self.vector.n

    @property
    def sign(self) -> int:
        """``+1`` or ``-1`` for real elements.

        Raises:
            PauliModeException: If the phase is imaginary.
        """
        if self.phase % 2:
            raise PauliModeException("element has an imaginary phase")
        return 1 if self.phase == 0 else -1

    @property
    def scalar(self) -> complex:
        """The phase as a complex number."""
        return (1, 1j, -1, -1j)[self.phase]

    @property
    def weight(self) -> int:
        return self.vector.weight

    def to_complex(self) -> PauliElement:
        """The same operator viewed in the complex extension."""
        return PauliElement(self.vector, self.phase, PhaseMode.COMPLEX)

    def _check(self, other: PauliElement, operation: str) -> None:
        if self.n != other.n:
            raise DimensionException(operation, self.n, other.n)
        if self.mode is not other.mode:
            raise PauliModeException(
                f"{operation} got {self.mode.value} and {other.mode.value}"
            )

    def __mul__(self, other: Any) -> PauliElement:
        if not isinstance(other, PauliElement):
            return NotImplemented
        return multiply(self, other)

    def square(self) -> PauliElement:
        """``e²``, which is ``(-I)^Q(ē)`` for real elements."""
        return multiply(self, self)

    def inverse(self) -> PauliElement:
        """``e⁻¹ = i^(-phase) Z(b)X(a) = i^(-phase) (-1)^Q X(a)Z(b)``."""
        return PauliElement(
            self.vector,
            -self.phase + 2 * quadratic_form(self.vector),
            self.mode,
        )

    def commutes(self, other: PauliElement) -> bool:
        return commutes(self, other)

    def __str__(self) -> str:
        n = self.n
        return (
            f"{_SIGNS[self.phase]}X({format_bits(self.vector.a, n)})"
            f"Z({format_bits(self.vector.b, n)})"
        )

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({str(self)!r})"


def multiply(e1: PauliElement, e2: PauliElement) -> PauliElement:
    """Product in normal form.

    Moving ``Z(b₁)`` past ``X(a₂)`` costs ``(-1)^(b₁·a₂)``; the vector
    parts add.

    Raises:
        DimensionException: If the qubit counts differ.
        PauliModeException: If the modes differ.
    """
    e1._check(e2, "multiply")  # pylint: disable=protected-access
    reorder = (e1.vector.b & e2.vector.a).bit_count() & 1
    return PauliElement(
        e1.vector + e2.vector,
        e1.phase + e2.phase + 2 * reorder,
        e1.mode,
    )


def commutes(e1: PauliElement, e2: PauliElement) -> bool:
    """``e₁e₂ = (-1)^(ē₁,ē₂) e₂e₁``; true when the form vanishes.

    Examples:
        >>> x = PauliElement.from_string("X(10)Z(00)")
        >>> z = PauliElement.from_string("X(00)Z(10)")
        >>> commutes(x, z)
        False
    """
    if e1.n != e2.n:
        raise DimensionException("commutes", e1.n, e2.n)
    return symplectic_product(e1.vector, e2.vector) == 0

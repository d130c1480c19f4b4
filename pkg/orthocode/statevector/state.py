from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np
import numpy.typing as npt

from orthocode.gf2.exceptions import DimensionException
from orthocode.gf2.vector import parse_bits
from orthocode.pauli.element import PauliElement
from orthocode.statevector.exceptions import StateSizeException

MAX_QUBITS = 12

Amplitudes = npt.NDArray[np.complex128]


def check_size(n: int, limit: int = MAX_QUBITS) -> None:
    if not 1 <= n <= limit:
        raise StateSizeException(n, limit)


@lru_cache(maxsize=MAX_QUBITS)
def labels(n: int) -> npt.NDArray[np.int64]:
    """Basis labels ``0..2ⁿ-1``; label ``v`` is ``|v⟩`` with the
    leftmost printed qubit in the highest bit."""
    out = np.arange(1 << n, dtype=np.int64)
    out.setflags(write=False)
    return out


def pauli_rows(e: PauliElement, array: npt.NDArray[Any]) -> Amplitudes:
    """Applies ``e`` along axis 0 of ``array`` (a state, or states as
    columns): ``Z(b)``, then ``X(a)``, then the phase."""
    idx = labels(e.n)
    parity = np.bitwise_count(idx & e.vector.b) & 1
    signs = 1 - 2 * parity.astype(np.int64)
    if array.ndim == 2:
        signs = signs[:, None]
    flipped = (array * signs)[idx ^ e.vector.a]
    return np.asarray(flipped * e.scalar, dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class StateVector:
    """A dense state on ``n <= 12`` qubits.

    ``amplitudes[v]`` is the coefficient of ``|v⟩``, where the label
    ``v`` reads the qubits left to right as printed, most significant
    bit first, the same order code files use.

    Examples:
        >>> psi = StateVector.basis(2, "10")
        >>> int(np.argmax(abs(psi.amplitudes)))
        2
    """

    n: int
    amplitudes: Amplitudes

    def __post_init__(self) -> None:
        check_size(self.n)
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise DimensionException("StateVector", 1 << self.n, amps.size)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, n: int, label: int | str) -> StateVector:
        """``|v⟩`` for an integer label or a bit string."""
        if isinstance(label, str):
            label = parse_bits(label)
        amps = np.zeros(1 << n, dtype=np.complex128)
        amps[label] = 1.0
        return cls(n, amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> StateVector:
        return StateVector(self.n, self.amplitudes / self.norm())

    def inner(self, other: StateVector) -> complex:
        """``⟨self|other⟩``."""
        if other.n != self.n:
            raise DimensionException("StateVector.inner", self.n, other.n)
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def overlap(self, other: StateVector) -> float:
        """``|⟨self|other⟩|``."""
        return abs(self.inner(other))

    def allclose(self, other: StateVector, atol: float = 1e-12) -> bool:
        return self.n == other.n and bool(
            np.allclose(self.amplitudes, other.amplitudes, rtol=0, atol=atol)
        )

    def __add__(self, other: Any) -> StateVector:
        if not isinstance(other, StateVector):
            return NotImplemented
        if other.n != self.n:
            raise DimensionException("StateVector.__add__", self.n, other.n)
        return StateVector(self.n, self.amplitudes + other.amplitudes)

    def __mul__(self, scalar: complex) -> StateVector:
        return StateVector(self.n, self.amplitudes * scalar)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={self.n})"


def apply_pauli(e: PauliElement, psi: StateVector) -> StateVector:
    """``e|ψ⟩`` for ``e = i^λ X(a)Z(b)``, using
    ``X(a)|v⟩ = |v+a⟩`` and ``Z(b)|v⟩ = (-1)^(b·v)|v⟩``.

    Raises:
        DimensionException: If the qubit counts differ.

    Examples:
        >>> from orthocode.pauli import PauliElement
        >>> x = PauliElement.from_string("X(10)Z(00)")
        >>> apply_pauli(x, StateVector.basis(2, "00")).allclose(
        ...     StateVector.basis(2, "10")
        ... )
        True
    """
    if e.n != psi.n:
        raise DimensionException("apply_pauli", psi.n, e.n)
    return StateVector(psi.n, pauli_rows(e, psi.amplitudes))

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any

from orthocode.gf2.exceptions import DimensionException
from orthocode.gf2.matrix import GF2Matrix, swap_halves
from orthocode.gf2.vector import (
    SympVector,
    format_bits,
    quadratic_form,
    symplectic_product,
)


class GateKind(str, Enum):
    """The generator families, named as in serialised words."""

    H_ALL = "H_ALL"
    H = "H"
    GL = "GL"
    DM = "DM"
    DP = "DP"


@dataclass(frozen=True)
class Gate:
    """One generator in a word.

    Args:
        kind (GateKind): Generator family.
        qubit (int | None): 1-based qubit for ``H``.
        matrix (GF2Matrix | None): ``A`` for ``GL``, ``M`` for ``DM``,
            ``P`` for ``DP``.

    Examples:
        >>> str(Gate(GateKind.H, qubit=3))
        'H 3'
        >>> str(Gate(GateKind.GL, matrix=GF2Matrix.from_strings(["11", "01"])))
        'GL 11 01'
    """

    kind: GateKind
    qubit: int | None = None
    matrix: GF2Matrix | None = None

    def inverse(self) -> Gate:
        """The generator undoing this one on the binary space.

        Every family is an involution there except ``GL``, whose
        inverse is ``GL(A⁻¹)``.
        """
        if self.kind is GateKind.GL and self.matrix is not None:
            return Gate(GateKind.GL, matrix=self.matrix.inverse())
        return self

    def __str__(self) -> str:
        if self.kind is GateKind.H_ALL:
            return self.kind.value
        if self.kind is GateKind.H:
            return f"{self.kind.value} {self.qubit}"
        assert self.matrix is not None
        rows = " ".join(format_bits(r, self.matrix.ncols) for r in self.matrix)
        return f"{self.kind.value} {rows}"


def symplectic_gram(n: int) -> GF2Matrix:
    """The Gram matrix ``J`` of the alternating form: ``[[0, I], [I, 0]]``
    so that ``(u, v) = u J vᵀ``."""
    return GF2Matrix(
        tuple(swap_halves(1 << (2 * n - 1 - i), n) for i in range(2 * n)),
        2 * n,
    )


@dataclass(frozen=True)
class SympMatrix:
    # pylint: disable=line-too-long
    """A ``2n × 2n`` binary matrix acting on row vectors ``(a|b)`` by
    right multiplication, the action a Clifford element induces on the
    binary space.

    ``real`` marks products of generators of the real group, which
    must also preserve the quadratic form; ``word`` lists the
    generators the matrix was composed from, first applied first.

    Args:
        n (int): Qubit count.
        matrix (GF2Matrix): The ``2n × 2n`` matrix.
        real (bool): Built only from real-group generators.
        word (tuple[Gate, ...]): Generator decomposition.

    Examples:
        >>> g = SympMatrix.identity(2)
        >>> str(g.apply(SympVector.from_string("10|01")))
        '10|01'
    """

    n: int
    matrix: GF2Matrix
    real: bool = True
    word: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        if self.matrix.shape != (2 * self.n, 2 * self.n):
            raise DimensionException(
                "SympMatrix", 2 * self.n, self.matrix.nrows
            )
        object.__setattr__(self, "word", tuple(self.word))

    @classmethod
    def identity(cls, n: int) -> SympMatrix:
        return cls(n, GF2Matrix.identity(2 * n))

    def apply(self, v: SympVector) -> SympVector:
        """``v · m``."""
        if v.n != self.n:
            raise DimensionException("SympMatrix.apply", self.n, v.n)
        return SympVector.from_row(self.matrix.row_times(v.row), self.n)

    def __matmul__(self, other: Any) -> SympMatrix:
        if not isinstance(other, SympMatrix):
            return NotImplemented
        return compose(self, other)

    def inverse(self) -> SympMatrix:
        """Inverse matrix; the word is reversed with each generator
        inverted."""
        return SympMatrix(
            self.n,
            self.matrix.inverse(),
            self.real,
            tuple(g.inverse() for g in reversed(self.word)),
        )

    def is_identity(self) -> bool:
        return self.matrix == GF2Matrix.identity(2 * self.n)

    def preserves_alternating_form(self) -> bool:
        """``m J mᵀ = J``."""
        gram = symplectic_gram(self.n)
        return self.matrix @ gram @ self.matrix.transpose() == gram

    def alternating_witness(self) -> tuple[SympVector, SympVector] | None:
        """A pair of unit vectors whose pairing changes, or ``None``."""
        units = _units(self.n)
        for u, v in combinations(units, 2):
            before = symplectic_product(u, v)
            if symplectic_product(self.apply(u), self.apply(v)) != before:
                return u, v
        return None

    def quadratic_witness(self) -> SympVector | None:
        """A vector ``v`` with ``Q(v·m) ≠ Q(v)``, or ``None``.

        ``Q∘m - Q`` is itself a quadratic form, so it vanishes
        everywhere once it vanishes on the unit vectors and on the sums
        of pairs of them.
        """
        units = _units(self.n)
        candidates = units + [u + v for u, v in combinations(units, 2)]
        for v in candidates:
            if quadratic_form(self.apply(v)) != quadratic_form(v):
                return v
        return None

    def preserves_quadratic_form(self) -> bool:
        return self.quadratic_witness() is None

    def __str__(self) -> str:
        return str(self.matrix)


def _units(n: int) -> list[SympVector]:
    return [SympVector.from_row(1 << i, n) for i in range(2 * n - 1, -1, -1)]


def compose(g1: SympMatrix, g2: SympMatrix) -> SympMatrix:
    """Apply ``g1`` then ``g2``: ``v ↦ v·m₁·m₂``.

    The real tag survives only if both factors carry it; the words
    concatenate.

    Raises:
        DimensionException: If the qubit counts differ.
    """
    if g1.n != g2.n:
        raise DimensionException("compose", g1.n, g2.n)
    return SympMatrix(
        g1.n,
        g1.matrix @ g2.matrix,
        g1.real and g2.real,
        g1.word + g2.word,
    )

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace
from functools import cached_property

from orthocode.gf2.exceptions import DimensionException
from orthocode.gf2.matrix import EchelonBasis, GF2Matrix, symplectic_dual
from orthocode.gf2.vector import SympVector, quadratic_form
from orthocode.pauli.element import PauliElement, PhaseMode


@dataclass(frozen=True)
class StabilizerCode:
    # pylint: disable=line-too-long
    """A stabilizer code given by generators of ``S̄`` and a character.

    The generators should be independent and pairwise orthogonal
    under the alternating form; :func:`orthocode.codes.validate`
    checks this, the constructor only checks shapes. ``signs[i]`` is
    the eigenvalue the codespace has under generator ``i``.

    A code whose generators all satisfy ``Q = 0`` lives in the real
    group. A generator with ``Q = 1`` squares to ``-I`` there, so such
    codes are only meaningful in the complex extension, where the
    generator becomes the Hermitian element ``i·X(a)Z(b)``.

    Args:
        n (int): Qubit count.
        generators (tuple[SympVector, ...]): Rows of an ``S̄`` basis.
        signs (tuple[int, ...]): ``±1`` per generator; all ``+1`` when
            omitted.
        name (str): Label used in reports.

    Raises:
        DimensionException: If a generator or the sign count does not
            match ``n``.
        ValueError: If a sign is not ``+1`` or ``-1``.

    Examples:
        >>> code = StabilizerCode.from_strings(
        ...     ["11000|00101", "01100|10010", "00110|01001", "00011|10100"]
        ... )
        >>> code.k_bar, code.encoded_qubits, code.dual_basis.nrows
        (4, 1, 6)
    """

    n: int
    generators: tuple[SympVector, ...]
    signs: tuple[int, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.n < 1:
            raise DimensionException("StabilizerCode", 1, self.n)
        for g in self.generators:
            if g.n != self.n:
                raise DimensionException("StabilizerCode", self.n, g.n)
        signs = tuple(self.signs) or (1,) * len(self.generators)
        if len(signs) != len(self.generators):
            raise DimensionException(
                "StabilizerCode.signs", len(self.generators), len(signs)
            )
        bad = [s for s in signs if s not in (1, -1)]
        if bad:
            raise ValueError(f"signs must be +1 or -1, got {bad[0]!r}")
        object.__setattr__(self, "signs", tuple(int(s) for s in signs))

    @classmethod
    def from_strings(
        cls,
        lines: Sequence[str],
        signs: Sequence[int] | None = None,
        name: str = "",
        n: int | None = None,
    ) -> StabilizerCode:
        """Builds a code from ``"a|b"`` rows; ``n`` is only needed when
        ``lines`` is empty."""
        vectors = [SympVector.from_string(ln) for ln in lines]
        if n is None:
            if not vectors:
                raise DimensionException("StabilizerCode.from_strings", 1, 0)
            n = vectors[0].n
        return cls(n, tuple(vectors), tuple(signs or ()), name)

    @classmethod
    def from_matrix(
        cls, matrix: GF2Matrix, signs: Iterable[int] = (), name: str = ""
    ) -> StabilizerCode:
        if matrix.ncols % 2:
            raise DimensionException(
                "StabilizerCode.from_matrix", matrix.ncols + 1, matrix.ncols
            )
        return cls(
            matrix.ncols // 2, tuple(matrix.to_vectors()), tuple(signs), name
        )

    @property
    def matrix(self) -> GF2Matrix:
        return GF2Matrix.from_vectors(self.generators, self.n)

    @cached_property
    def stabilizer(self) -> EchelonBasis:
        """Echelon form of ``S̄`` for membership queries."""
        return EchelonBasis((g.row for g in self.generators), 2 * self.n)

    @property
    def k_bar(self) -> int:
        """``dim S̄``."""
        return self.stabilizer.rank

    @property
    def encoded_qubits(self) -> int:
        return self.n - self.k_bar

    @cached_property
    def dual_basis(self) -> GF2Matrix:
        """A basis of ``S̄⊥``."""
        return symplectic_dual(self.matrix)

    @cached_property
    def dual(self) -> EchelonBasis:
        return self.dual_basis.echelon()

    @property
    def is_real(self) -> bool:
        """Whether every generator satisfies ``Q = 0``."""
        return all(quadratic_form(g) == 0 for g in self.generators)

    @property
    def mode(self) -> PhaseMode:
        return PhaseMode.REAL if self.is_real else PhaseMode.COMPLEX

    def in_stabilizer(self, v: SympVector) -> bool:
        return self.stabilizer.contains(v.row)

    def in_dual(self, v: SympVector) -> bool:
        return self.dual.contains(v.row)

    def elements(self) -> list[PauliElement]:
        """The generators as group elements carrying their signs.

        Real codes give ``±X(a)Z(b)``. Otherwise every generator is
        put in the complex extension and those with ``Q = 1`` get an
        extra ``i`` so each squares to ``+I``.
        """
        mode = self.mode
        return [
            PauliElement(
                g,
                (0 if s > 0 else 2) + quadratic_form(g),
                mode,
            )
            for g, s in zip(self.generators, self.signs)
        ]

    def with_signs(self, signs: Iterable[int]) -> StabilizerCode:
        """The same ``S̄`` with another character."""
        return replace(self, signs=tuple(signs))

    def __str__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return (
            f"{label}[[{self.n},{self.encoded_qubits}]] with "
            f"{len(self.generators)} generator(s)"
        )

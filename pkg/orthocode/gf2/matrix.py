from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any, overload

from orthocode.gf2.exceptions import (
    DimensionException,
    SingularMatrixException,
)
from orthocode.gf2.vector import SympVector, format_bits, parse_bits


class EchelonBasis:
    """Row echelon form of a set of binary rows, kept for repeated
    membership and coordinate queries.

    Pivots are the lowest-index nonzero column of each row (the most
    significant bit), chosen in column order, so the reduced basis is
    the same on every run. Every echelon row also remembers which
    input rows it is the sum of.

    Args:
        rows (Iterable[int]): Packed rows, column 0 in the most
            significant bit.
        ncols (int): Row length.

    Examples:
        >>> basis = EchelonBasis([0b110, 0b011], 3)
        >>> basis.rank
        2
        >>> basis.contains(0b101)
        True
        >>> basis.coordinates(0b101)
        3
    """

    def __init__(self, rows: Iterable[int], ncols: int) -> None:
        self.ncols = ncols
        work = [(r, 1 << i) for i, r in enumerate(rows)]
        self.pivots: list[int] = []
        lead = 0
        for col in range(ncols):
            bit = 1 << (ncols - 1 - col)
            hit = next(
                (i for i in range(lead, len(work)) if work[i][0] & bit), None
            )
            if hit is None:
                continue
            work[lead], work[hit] = work[hit], work[lead]
            p_row, p_combo = work[lead]
            for i, (r, c) in enumerate(work):
                if i != lead and r & bit:
                    work[i] = (r ^ p_row, c ^ p_combo)
            self.pivots.append(col)
            lead += 1
        self.rows = [r for r, _ in work[:lead]]
        self.combos = [c for _, c in work[:lead]]
        self.dependent = [c for r, c in work[lead:] if r == 0]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: int) -> tuple[int, int]:
        """Subtracts echelon rows from ``row``.

        Returns:
            tuple[int, int]: The remainder and the mask of input rows
                used.
        """
        combo = 0
        for col, r, c in zip(self.pivots, self.rows, self.combos):
            if row >> (self.ncols - 1 - col) & 1:
                row ^= r
                combo ^= c
        return row, combo

    def contains(self, row: int) -> bool:
        """Whether ``row`` lies in the span."""
        return self.reduce(row)[0] == 0

    def coordinates(self, row: int) -> int | None:
        """Mask of input rows summing to ``row``, ``None`` outside the
        span."""
        rest, combo = self.reduce(row)
        return combo if rest == 0 else None


@dataclass(frozen=True, slots=True)
class GF2Matrix:
    """An immutable binary matrix stored as packed row integers.

    Column 0 is the most significant bit of each row, which matches
    the left-to-right order of printed bit strings. Rows of a
    ``2n``-column matrix read as symplectic vectors carry ``a`` in the
    high half and ``b`` in the low half.

    Args:
        rows (tuple[int, ...]): Packed rows.
        ncols (int): Number of columns.

    Examples:
        >>> m = GF2Matrix.from_strings(["11", "01"])
        >>> print(m)
        11
        01
        >>> print(m @ m)
        10
        01
        >>> print(m.inverse())
        11
        01
    """

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.ncols < 0:
            raise DimensionException("GF2Matrix", 0, self.ncols)
        limit = 1 << self.ncols
        for row in self.rows:
            if not 0 <= row < limit:
                raise DimensionException(
                    "GF2Matrix", self.ncols, row.bit_length()
                )

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> GF2Matrix:
        """Builds a matrix from bit strings; ``|`` and blanks are
        ignored so ``"11000|00101"`` is a 10-column row."""
        cleaned = [ln.replace("|", "").replace(" ", "") for ln in lines]
        if not cleaned:
            return cls((), 0)
        width = len(cleaned[0])
        for line in cleaned:
            if len(line) != width:
                raise DimensionException(
                    "GF2Matrix.from_strings", width, len(line)
                )
        return cls(tuple(parse_bits(ln) for ln in cleaned), width)

    @classmethod
    def from_vectors(
        cls, vectors: Iterable[SympVector], n: int | None = None
    ) -> GF2Matrix:
        """Stacks symplectic vectors as ``2n``-column rows.

        Args:
            vectors (Iterable[SympVector]): The rows.
            n (int | None): Qubit count, required when ``vectors`` is
                empty.
        """
        vecs = list(vectors)
        if n is None:
            if not vecs:
                raise DimensionException("GF2Matrix.from_vectors", 1, 0)
            n = vecs[0].n
        for v in vecs:
            if v.n != n:
                raise DimensionException("GF2Matrix.from_vectors", n, v.n)
        return cls(tuple(v.row for v in vecs), 2 * n)

    @classmethod
    def from_array(cls, array: Sequence[Sequence[int]]) -> GF2Matrix:
        """Builds a matrix from nested 0/1 sequences."""
        return cls.from_strings(
            ["".join(str(int(x) & 1) for x in row) for row in array]
        )

    @classmethod
    def identity(cls, size: int) -> GF2Matrix:
        return cls(tuple(1 << (size - 1 - i) for i in range(size)), size)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> GF2Matrix:
        return cls((0,) * nrows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        yield from self.rows

    @overload
    def __getitem__(self, index: int) -> int: ...

    @overload
    def __getitem__(self, index: tuple[int, int]) -> int: ...

    def __getitem__(self, index: int | tuple[int, int]) -> int:
        """``m[i]`` is the packed row, ``m[i, j]`` a single entry."""
        if isinstance(index, tuple):
            i, j = index
            return (self.rows[i] >> (self.ncols - 1 - j)) & 1
        return self.rows[index]

    def to_vectors(self) -> list[SympVector]:
        """Reads the rows back as symplectic vectors."""
        if self.ncols % 2:
            raise DimensionException(
                "GF2Matrix.to_vectors", self.ncols + 1, self.ncols
            )
        return [SympVector.from_row(r, self.ncols // 2) for r in self.rows]

    def to_lists(self) -> list[list[int]]:
        return [
            [int(c) for c in format_bits(r, self.ncols)] for r in self.rows
        ]

    def transpose(self) -> GF2Matrix:
        cols = []
        for j in range(self.ncols):
            col = 0
            for r in self.rows:
                col = (col << 1) | ((r >> (self.ncols - 1 - j)) & 1)
            cols.append(col)
        return GF2Matrix(tuple(cols), self.nrows)

    @property
    def T(self) -> GF2Matrix:  # pylint: disable=invalid-name
        return self.transpose()

    def row_times(self, row: int) -> int:
        """Row vector times matrix: XOR of the rows selected by the
        bits of ``row``."""
        out = 0
        for i, r in enumerate(self.rows):
            if row >> (self.nrows - 1 - i) & 1:
                out ^= r
        return out

    def __matmul__(self, other: Any) -> GF2Matrix:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionException(
                "GF2Matrix.__matmul__", self.ncols, other.nrows
            )
        return GF2Matrix(
            tuple(other.row_times(r) for r in self.rows), other.ncols
        )

    def __add__(self, other: Any) -> GF2Matrix:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionException(
                "GF2Matrix.__add__", self.nrows, other.nrows
            )
        return GF2Matrix(
            tuple(x ^ y for x, y in zip(self.rows, other.rows)), self.ncols
        )

    def stack(self, other: GF2Matrix) -> GF2Matrix:
        """Rows of ``self`` followed by rows of ``other``."""
        if self.ncols != other.ncols:
            raise DimensionException(
                "GF2Matrix.stack", self.ncols, other.ncols
            )
        return GF2Matrix(self.rows + other.rows, self.ncols)

    def echelon(self) -> EchelonBasis:
        return EchelonBasis(self.rows, self.ncols)

    def row_reduce(self) -> GF2Matrix:
        """Reduced row echelon form with the zero rows dropped."""
        return GF2Matrix(tuple(self.echelon().rows), self.ncols)

    def rank(self) -> int:
        return self.echelon().rank

    def nullspace(self) -> GF2Matrix:
        """Basis of ``{x : m xᵀ = 0}``, one vector per free column in
        increasing column order."""
        ech = self.echelon()
        pivot_set = set(ech.pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            x = 1 << (self.ncols - 1 - free)
            for col, r in zip(ech.pivots, ech.rows):
                if r >> (self.ncols - 1 - free) & 1:
                    x |= 1 << (self.ncols - 1 - col)
            basis.append(x)
        return GF2Matrix(tuple(basis), self.ncols)

    def complete_basis(self) -> GF2Matrix:
        """Appends unit rows, lowest column first, until the rows span
        the whole space."""
        ech = EchelonBasis(self.rows, self.ncols)
        rows = list(self.rows)
        for col in range(self.ncols):
            if ech.rank == self.ncols:
                break
            unit = 1 << (self.ncols - 1 - col)
            if not ech.contains(unit):
                rows.append(unit)
                ech = EchelonBasis(rows, self.ncols)
        return GF2Matrix(tuple(rows), self.ncols)

    def inverse(self) -> GF2Matrix:
        """Inverse over GF(2).

        Raises:
            DimensionException: If the matrix is not square.
            SingularMatrixException: If it is not invertible.
        """
        size = self.nrows
        if size != self.ncols:
            raise DimensionException("GF2Matrix.inverse", size, self.ncols)
        augmented = EchelonBasis(
            (
                (r << size) | (1 << (size - 1 - i))
                for i, r in enumerate(self.rows)
            ),
            2 * size,
        )
        if augmented.pivots[:size] != list(range(size)):
            rank = sum(1 for p in augmented.pivots if p < size)
            raise SingularMatrixException(rank, size)
        mask = (1 << size) - 1
        return GF2Matrix(tuple(r & mask for r in augmented.rows[:size]), size)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and self == self.transpose()

    def has_zero_diagonal(self) -> bool:
        return all(self[i, i] == 0 for i in range(min(self.shape)))

    def __str__(self) -> str:
        return "\n".join(format_bits(r, self.ncols) for r in self.rows)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(shape={self.shape}, "
            f"rows={[format_bits(r, self.ncols) for r in self.rows]})"
        )


def _as_row(v: SympVector | int, ncols: int, operation: str) -> int:
    if isinstance(v, SympVector):
        if 2 * v.n != ncols:
            raise DimensionException(operation, ncols, 2 * v.n)
        return v.row
    if not 0 <= v < (1 << ncols):
        raise DimensionException(operation, ncols, v.bit_length())
    return v


def rank(m: GF2Matrix) -> int:
    """GF(2) row rank; ``m`` is not modified.

    Examples:
        >>> rank(GF2Matrix.from_strings(["11000|00101", "01100|10010"]))
        2
    """
    return m.rank()


def in_span(v: SympVector | int, m: GF2Matrix) -> bool:
    """Whether ``v`` is a sum of rows of ``m``.

    Raises:
        DimensionException: If the column counts differ.

    Examples:
        >>> m = GF2Matrix.from_strings(["11000|00101", "01100|10010"])
        >>> in_span(SympVector.from_string("10100|10111"), m)
        True
    """
    return m.echelon().contains(_as_row(v, m.ncols, "in_span"))


def swap_halves(row: int, n: int) -> int:
    """``(a|b) -> (b|a)`` on a packed ``2n``-bit row."""
    mask = (1 << n) - 1
    return ((row & mask) << n) | (row >> n)


def symplectic_dual(m: GF2Matrix) -> GF2Matrix:
    """Basis of the vectors orthogonal to every row of ``m`` under
    the alternating form; its dimension is ``2n - rank(m)``.

    ``(v, r) = v · (b_r|a_r)``, so the dual is the ordinary null
    space of ``m`` with each row's halves swapped.

    Examples:
        >>> dual = symplectic_dual(GF2Matrix.zeros(0, 4))
        >>> dual.nrows
        4
    """
    if m.ncols % 2:
        raise DimensionException("symplectic_dual", m.ncols + 1, m.ncols)
    n = m.ncols // 2
    swapped = GF2Matrix(tuple(swap_halves(r, n) for r in m.rows), m.ncols)
    return swapped.nullspace()

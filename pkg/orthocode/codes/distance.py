"""Exhaustive minimum-weight search over ``S̄⊥``.

Coefficient vectors are visited in reflected Gray-code order, so each
step adds a single basis row. The low coefficients are expanded once
into a table of ``2^L`` packed vectors; the high coefficients select a
block offset that changes by one row per block. Every block is then a
handful of vectorised numpy operations over the table.

The dual basis is ordered with rows completing ``S̄`` first and the
``S̄`` rows last, so a vector lies in ``S̄`` exactly when its low
``c`` coefficients vanish, where ``c = dim S̄⊥ - dim S̄``.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from orthocode.codes.code import StabilizerCode
from orthocode.codes.exceptions import (
    InvalidCodeException,
    SearchSpaceTooLargeException,
)
from orthocode.codes.validation.orchestrator import CodeValidationOrchestrator
from orthocode.gf2.matrix import EchelonBasis
from orthocode.gf2.vector import SympVector
from orthocode.observations import (
    DistanceBudgetExhausted,
    DistanceSearchFinished,
    DistanceSearchStarted,
)
from orthocode.probes.probe import Probe, resolve

MAX_DIMENSION = 34
"""Largest ``dim S̄⊥`` enumerated without a budget."""

LOW_BITS = 18
"""Coefficients expanded into the lookup table."""

_WORD = 64
_WORD_MASK = (1 << _WORD) - 1

Words = npt.NDArray[np.uint64]


@dataclass(frozen=True)
class DistanceReport:
    # pylint: disable=too-many-instance-attributes
    """Minimum symplectic weights over ``S̄⊥ \\ {0}`` and ``S̄⊥ \\ S̄``.

    A search stopped by its budget has ``exhaustive=False``; its minima
    are then attained by the witnesses but are only upper bounds on
    the true minima.

    Attributes:
        n (int): Qubit count.
        k_bar (int): ``dim S̄``.
        dual_dimension (int): ``dim S̄⊥``.
        min_weight_dual (int | None): Minimum over ``S̄⊥ \\ {0}``.
        min_weight_dual_minus_stabilizer (int | None): Minimum over
            ``S̄⊥ \\ S̄``; ``None`` when that set is empty (or was not
            reached by a partial scan).
        witness (SympVector | None): First vector in traversal order
            attaining ``min_weight_dual``.
        witness_dual_minus_stabilizer (SympVector | None): Same for
            the second minimum.
        vectors_scanned (int): Nonzero vectors examined.
        exhaustive (bool): Whether every nonzero vector was examined.
    """

    n: int
    k_bar: int
    dual_dimension: int
    min_weight_dual: int | None
    min_weight_dual_minus_stabilizer: int | None
    witness: SympVector | None
    witness_dual_minus_stabilizer: SympVector | None
    vectors_scanned: int
    exhaustive: bool

    @property
    def encoded_qubits(self) -> int:
        return self.n - self.k_bar

    def to_dict(self, exclude_stabilizer: bool = False) -> dict[str, Any]:
        """The machine-readable report. ``witness`` belongs to the
        minimum selected by ``exclude_stabilizer``."""
        witness = (
            self.witness_dual_minus_stabilizer
            if exclude_stabilizer
            else self.witness
        )
        return {
            "n": self.n,
            "k": self.encoded_qubits,
            "dim_S": self.k_bar,
            "d_dual": self.min_weight_dual,
            "d_dual_minus_S": self.min_weight_dual_minus_stabilizer,
            "witness": str(witness) if witness else None,
            "vectors_scanned": self.vectors_scanned,
            "exhaustive": self.exhaustive,
        }

    def format(self, exclude_stabilizer: bool = False) -> str:
        bound = "" if self.exhaustive else " (upper bound)"
        lines = [
            f"n={self.n} k={self.encoded_qubits} dim_S={self.k_bar} "
            f"dim_dual={self.dual_dimension}"
        ]
        if not exclude_stabilizer:
            lines.append(
                f"d_dual={self.min_weight_dual}{bound} "
                f"witness={self.witness}"
            )
        lines.append(
            f"d_dual_minus_S={self.min_weight_dual_minus_stabilizer}{bound}"
            f" witness={self.witness_dual_minus_stabilizer}"
        )
        lines.append(
            f"scanned={self.vectors_scanned} "
            f"exhaustive={'yes' if self.exhaustive else 'no'}"
        )
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class _Best:
    """Running minima as ``(weight, traversal index)`` pairs; the
    pair order picks the earliest witness on ties."""

    dual: tuple[int, int] | None = None
    outside: tuple[int, int] | None = None

    def merge(self, other: _Best) -> _Best:
        return _Best(
            _min(self.dual, other.dual), _min(self.outside, other.outside)
        )


def _min(
    x: tuple[int, int] | None, y: tuple[int, int] | None
) -> tuple[int, int] | None:
    if x is None:
        return y
    if y is None:
        return x
    return min(x, y)


def _gray(i: int) -> int:
    return i ^ (i >> 1)


def ordered_dual_basis(code: StabilizerCode) -> tuple[list[int], int]:
    """Rows of ``S̄⊥`` with the complement of ``S̄`` first.

    Returns:
        tuple[list[int], int]: The packed rows and the number ``c`` of
            complement rows in front.
    """
    ncols = 2 * code.n
    stab_rows = list(code.stabilizer.rows)
    seen = EchelonBasis(stab_rows, ncols)
    complement: list[int] = []
    for row in code.dual_basis:
        if not seen.contains(row):
            complement.append(row)
            seen = EchelonBasis(stab_rows + complement, ncols)
    return complement + stab_rows, len(complement)


class _Enumerator:
    """Shared read-only tables for one search."""

    def __init__(self, n: int, rows: list[int], complement: int) -> None:
        self.n = n
        self.rows = rows
        self.m = len(rows)
        self.low = min(self.m, LOW_BITS)
        self.words = max(1, -(-n // _WORD))
        self.sentinel = n + 1
        low_mask = (1 << min(complement, self.low)) - 1
        self.high_mask = (1 << max(0, complement - self.low)) - 1

        packed = np.array(
            [self._pack(r) for r in rows] or [[0] * 2 * self.words],
            dtype=np.uint64,
        ).reshape(-1, 2 * self.words)
        self.packed = packed
        size = 1 << self.low
        table = np.zeros((size, 2 * self.words), dtype=np.uint64)
        span = 1
        for j in range(self.low):
            table[span : 2 * span] = table[:span][::-1] ^ packed[j]
            span *= 2
        labels = np.arange(size, dtype=np.int64)
        in_low = ((labels ^ (labels >> 1)) & low_mask) == 0
        self.in_low = (in_low, in_low[::-1])
        self.tables = (table, table[::-1])

    def _pack(self, row: int) -> list[int]:
        halves = (row >> self.n, row & ((1 << self.n) - 1))
        return [
            (half >> (_WORD * w)) & _WORD_MASK
            for half in halves
            for w in range(self.words)
        ]

    def block_offset(self, h: int) -> Words:
        offset = np.zeros(2 * self.words, dtype=np.uint64)
        bits = _gray(h)
        j = 0
        while bits:
            if bits & 1:
                offset ^= self.packed[self.low + j]
            bits >>= 1
            j += 1
        return offset

    def scan(self, first: int, last: int, end: int) -> _Best:
        """Scans blocks ``first..last-1``, stopping before traversal
        index ``end``."""
        size = 1 << self.low
        best = _Best()
        offset = self.block_offset(first)
        for h in range(first, last):
            if h > first:
                step = (h & -h).bit_length() - 1
                offset = offset ^ self.packed[self.low + step]
            stop = min(size, end - h * size)
            parity = h & 1
            values = self.tables[parity][:stop] ^ offset
            ored = values[:, : self.words] | values[:, self.words :]
            weights = np.bitwise_count(ored).sum(axis=1, dtype=np.int64)
            if h == 0:
                weights[0] = self.sentinel
            best = best.merge(self._block_best(h, weights, parity, stop))
        return best

    def _block_best(
        self,
        h: int,
        weights: npt.NDArray[np.int64],
        parity: int,
        stop: int,
    ) -> _Best:
        base = h << self.low
        i = int(np.argmin(weights))
        dual = None
        if weights[i] < self.sentinel:
            dual = (int(weights[i]), base + i)
        if _gray(h) & self.high_mask:
            outside_weights = weights
        else:
            outside_weights = np.where(
                self.in_low[parity][:stop], self.sentinel, weights
            )
        j = int(np.argmin(outside_weights))
        outside = None
        if outside_weights[j] < self.sentinel:
            outside = (int(outside_weights[j]), base + j)
        return _Best(dual, outside)

    def vector_at(self, index: int) -> SympVector:
        coefficients = _gray(index)
        row = 0
        for j in range(self.m):
            if coefficients >> j & 1:
                row ^= self.rows[j]
        return SympVector.from_row(row, self.n)


def _ranges(blocks: int, workers: int) -> list[tuple[int, int]]:
    workers = max(1, min(workers, blocks))
    step, extra = divmod(blocks, workers)
    out, start = [], 0
    for w in range(workers):
        stop = start + step + (1 if w < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def distance(
    code: StabilizerCode,
    budget: int | None = None,
    workers: int = 1,
    probe: Probe | None = None,
) -> DistanceReport:
    """Minimum symplectic weights of ``S̄⊥ \\ {0}`` and ``S̄⊥ \\ S̄``.

    Work is split into contiguous ranges of table blocks handled by a
    thread pool. Minima are combined by ``(weight, traversal index)``,
    so the report is identical for every worker count.

    Args:
        code (StabilizerCode): A code whose generators are pairwise
            orthogonal and independent.
        budget (int | None): Scan at most this many nonzero vectors.
        workers (int): Threads to use.
        probe (Probe | None): Receives the search observations.

    Raises:
        InvalidCodeException: If ``S̄`` is not self-orthogonal or the
            generators are dependent.
        SearchSpaceTooLargeException: If ``dim S̄⊥`` exceeds
            :data:`MAX_DIMENSION` and no budget is given.
        ValueError: If ``budget`` or ``workers`` is below 1.

    Examples:
        >>> from orthocode.codes.builtins import builtin
        >>> report = distance(builtin("five_qubit"))
        >>> report.min_weight_dual, report.vectors_scanned
        (3, 63)
    """
    if budget is not None and budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    found = CodeValidationOrchestrator(strict=False).validate(code)
    if not found.valid:
        raise InvalidCodeException("distance", map(str, found.violations))
    observer = resolve(probe)
    rows, complement = ordered_dual_basis(code)
    m = len(rows)
    if m > MAX_DIMENSION and budget is None:
        raise SearchSpaceTooLargeException(m, MAX_DIMENSION)
    total = (1 << m) - 1
    scanned = total if budget is None else min(budget, total)
    if scanned < total:
        observer.observe(DistanceBudgetExhausted(scanned, total))
    observer.observe(DistanceSearchStarted(code.n, m, scanned, workers))

    started = time.perf_counter()
    enum = _Enumerator(code.n, rows, complement)
    end = scanned + 1
    blocks = -(-end // (1 << enum.low))
    spans = _ranges(blocks, workers)
    if len(spans) == 1:
        results = [enum.scan(0, blocks, end)]
    else:
        with ThreadPoolExecutor(max_workers=len(spans)) as pool:
            results = list(
                pool.map(lambda span: enum.scan(span[0], span[1], end), spans)
            )
    best = _Best()
    for result in results:
        best = best.merge(result)

    report = DistanceReport(
        n=code.n,
        k_bar=code.k_bar,
        dual_dimension=m,
        min_weight_dual=best.dual[0] if best.dual else None,
        min_weight_dual_minus_stabilizer=(
            best.outside[0] if best.outside else None
        ),
        witness=enum.vector_at(best.dual[1]) if best.dual else None,
        witness_dual_minus_stabilizer=(
            enum.vector_at(best.outside[1]) if best.outside else None
        ),
        vectors_scanned=scanned,
        exhaustive=scanned == total,
    )
    observer.observe(
        DistanceSearchFinished(
            code.n,
            report.min_weight_dual,
            report.min_weight_dual_minus_stabilizer,
            scanned,
            time.perf_counter() - started,
        )
    )
    return report

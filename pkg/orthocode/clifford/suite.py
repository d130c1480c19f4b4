from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from orthocode.clifford.action import SympMatrix
from orthocode.clifford.generators import (
    diag_action,
    diag_action_complex,
    gl_action,
    hadamard_all,
    hadamard_single,
)
from orthocode.gf2.matrix import GF2Matrix
from orthocode.gf2.vector import SympVector, quadratic_form

# All 4ⁿ vectors are checked for the quadratic form up to this size.
EXHAUSTIVE_LIMIT = 6


@dataclass(frozen=True)
class SuiteEntry:
    """Outcome for one generator.

    ``witness`` is a vector whose quadratic form changed, if any.
    Complex generators are expected to lose the quadratic form, so
    they pass on the alternating form alone.
    """

    name: str
    real: bool
    preserves_alternating: bool
    preserves_quadratic: bool
    witness: SympVector | None = None

    @property
    def passed(self) -> bool:
        return self.preserves_alternating and (
            self.preserves_quadratic or not self.real
        )


@dataclass(frozen=True)
class SuiteResult:
    n: int
    entries: list[SuiteEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def __str__(self) -> str:
        lines = [f"n={self.n}"]
        for e in self.entries:
            status = "ok" if e.passed else "FAIL"
            detail = f" witness={e.witness}" if e.witness else ""
            lines.append(
                f"{e.name:<12} {'real' if e.real else 'complex':<8} "
                f"alt={int(e.preserves_alternating)} "
                f"Q={int(e.preserves_quadratic)} {status}{detail}"
            )
        return "\n".join(lines)


def quadratic_violation(g: SympMatrix) -> SympVector | None:
    """First vector, in row order, whose quadratic form ``g`` changes.

    Exhaustive over the whole space for small ``n`` and falls back to
    :meth:`SympMatrix.quadratic_witness` above :data:`EXHAUSTIVE_LIMIT`.
    """
    if g.n > EXHAUSTIVE_LIMIT:
        return g.quadratic_witness()
    for row in range(1, 1 << (2 * g.n)):
        v = SympVector.from_row(row, g.n)
        if quadratic_form(g.apply(v)) != quadratic_form(v):
            return v
    return None


def random_invertible(n: int, rng: np.random.Generator) -> GF2Matrix:
    while True:
        m = GF2Matrix.from_array(rng.integers(0, 2, size=(n, n)).tolist())
        if m.rank() == n:
            return m


def random_symmetric(
    n: int, rng: np.random.Generator, zero_diagonal: bool = True
) -> GF2Matrix:
    upper = np.triu(rng.integers(0, 2, size=(n, n)), k=1)
    sym = upper + upper.T
    if not zero_diagonal:
        np.fill_diagonal(sym, rng.integers(0, 2, size=n))
    return GF2Matrix.from_array(sym.tolist())


def _entry(name: str, g: SympMatrix) -> SuiteEntry:
    witness = quadratic_violation(g)
    return SuiteEntry(
        name,
        g.real,
        g.preserves_alternating_form(),
        witness is None,
        witness,
    )


def form_preservation_suite(n: int, seed: int = 0) -> SuiteResult:
    """Checks every generator family on ``n`` qubits.

    The fixed generators are ``H`` on all qubits and on each single
    qubit; random samples drawn with ``seed`` cover ``GL``, ``d_M``
    and ``d_P``. ``d_P`` with ``P = I`` is always included and must
    show a quadratic witness.

    Examples:
        >>> form_preservation_suite(2).passed
        True
    """
    rng = np.random.default_rng(seed)
    entries = [_entry("H_ALL", hadamard_all(n))]
    entries += [
        _entry(f"H {j}", hadamard_single(n, j)) for j in range(1, n + 1)
    ]
    entries.append(_entry("GL", gl_action(random_invertible(n, rng))))
    entries.append(_entry("DM", diag_action(random_symmetric(n, rng))))
    entries.append(
        _entry("DP", diag_action_complex(random_symmetric(n, rng, False)))
    )
    entries.append(
        _entry("DP I", diag_action_complex(GF2Matrix.identity(n)))
    )
    return SuiteResult(n, entries)

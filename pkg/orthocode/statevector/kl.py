from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from orthocode.codes.code import StabilizerCode
from orthocode.gf2.exceptions import DimensionException
from orthocode.observations import KnillLaflammeChecked
from orthocode.pauli.element import PauliElement
from orthocode.probes.probe import Probe, resolve
from orthocode.statevector.codespace import codespace_basis
from orthocode.statevector.state import check_size, pauli_rows

MAX_QUBITS = 10
TOLERANCE = 1e-9


@dataclass(frozen=True)
class KLResult:
    """Verdict of the state-vector error-correction conditions.

    Attributes:
        holds (bool): Whether every error pair passed.
        pair (tuple[PauliElement, PauliElement] | None): The first
            failing error pair in ``(i, j)`` order.
        indices (tuple[int, int] | None): Positions of that pair.
        codewords (tuple[int, int] | None): Basis indices ``(c₁, c₂)``
            of the failing matrix element; equal indices mean the
            diagonal elements differ.
        products (int): Distinct products ``ē₁ + ē₂`` evaluated.
    """

    holds: bool
    pair: tuple[PauliElement, PauliElement] | None = None
    indices: tuple[int, int] | None = None
    codewords: tuple[int, int] | None = None
    products: int = 0

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return f"hold over {self.products} distinct product(s)"
        assert self.pair is not None
        return (
            f"fail: {self.pair[0]} and {self.pair[1]} at codewords "
            f"{self.codewords}"
        )


def _violation(
    block: np.ndarray, atol: float
) -> tuple[int, int] | None:
    """First ``(c₁, c₂)`` where ``block`` is not a multiple of the
    identity."""
    size = block.shape[0]
    for c1 in range(size):
        for c2 in range(size):
            if c1 != c2 and abs(block[c1, c2]) > atol:
                return c1, c2
    for c in range(1, size):
        if abs(block[c, c] - block[0, 0]) > atol:
            return c, c
    return None


def verify_kl_conditions(
    code: StabilizerCode,
    errors: Sequence[PauliElement],
    character: Sequence[int] | None = None,
    atol: float = TOLERANCE,
    probe: Probe | None = None,
) -> KLResult:
    # pylint: disable=line-too-long
    """Checks ``⟨c₁|e₁⁻¹e₂|c₂⟩ = 0`` for orthogonal codewords and
    ``⟨c₁|e₁⁻¹e₂|c₁⟩ = ⟨c₂|e₁⁻¹e₂|c₂⟩`` on the codespace.

    Both conditions together say that ``B† (e₁⁻¹e₂) B`` is a multiple
    of the identity for an orthonormal basis ``B``; by linearity this
    covers every pair of codewords. The phase of ``e₁⁻¹e₂`` is a global
    scalar, so verdicts are cached per product vector.

    Raises:
        DimensionException: If an error acts on another qubit count.
        StateSizeException: If ``n`` exceeds 10.

    Examples:
        >>> from orthocode.codes.builtins import builtin
        >>> from orthocode.pauli import weight_t_error_set
        >>> verify_kl_conditions(builtin("five_qubit"), weight_t_error_set(5, 1)).holds
        True
    """
    check_size(code.n, MAX_QUBITS)
    for e in errors:
        if e.n != code.n:
            raise DimensionException("verify_kl_conditions", code.n, e.n)
    basis = np.column_stack(
        [psi.amplitudes for psi in codespace_basis(code, character)]
    )
    verdicts: dict[int, tuple[int, int] | None] = {}
    result = KLResult(True)
    for i, e1 in enumerate(errors):
        inverse = e1.inverse()
        for j in range(i, len(errors)):
            product = inverse * errors[j]
            key = product.vector.row
            if key not in verdicts:
                block = basis.conj().T @ pauli_rows(product, basis)
                verdicts[key] = _violation(block, atol)
            failure = verdicts[key]
            if failure is not None:
                result = KLResult(False, (e1, errors[j]), (i, j), failure)
                break
        if not result.holds:
            break
    result = KLResult(
        result.holds, result.pair, result.indices, result.codewords,
        len(verdicts),
    )
    resolve(probe).observe(
        KnillLaflammeChecked(code.n, len(errors), len(verdicts), result.holds)
    )
    return result

from __future__ import annotations

from sympy import isprime
from sympy.ntheory import is_quad_residue

from orthocode.codes.code import StabilizerCode
from orthocode.codes.exceptions import (
    CSSConstructionException,
    QuadraticResidueException,
)
from orthocode.gf2.exceptions import DimensionException
from orthocode.gf2.matrix import GF2Matrix
from orthocode.gf2.vector import SympVector, cyclic_shift, format_bits
from orthocode.observations import CodeConstructed
from orthocode.probes.probe import Probe, resolve


def css_from_classical(
    matrix: GF2Matrix,
    n: int | None = None,
    parity: bool = False,
    probe: Probe | None = None,
) -> StabilizerCode:
    """The CSS stabilizer of a classical code ``C`` with ``C⊥ ⊆ C``.

    ``S̄`` is spanned by ``(v|0)`` and ``(0|v)`` for ``v`` over a basis
    of ``C⊥``, so ``dim S̄ = 2(n - dim C)`` and the code carries
    ``2·dim C - n`` qubits.

    Args:
        matrix (GF2Matrix): Generator matrix of ``C``, or its parity
            check matrix when ``parity`` is set.
        n (int | None): Block length; checked against the matrix.
        parity (bool): Read ``matrix`` as a parity check matrix.
        probe (Probe | None): Receives a :class:`CodeConstructed`.

    Raises:
        CSSConstructionException: If ``C⊥ ⊄ C``; the message names a
            vector of ``C⊥`` outside ``C``.

    Examples:
        >>> hamming = GF2Matrix.from_strings(
        ...     ["1000110", "0100101", "0010011", "0001111"]
        ... )
        >>> code = css_from_classical(hamming)
        >>> code.n, len(code.generators), code.encoded_qubits
        (7, 6, 1)
    """
    length = matrix.ncols
    if n is not None and n != length:
        raise DimensionException("css_from_classical", n, length)
    if parity:
        code_basis, dual_basis = matrix.nullspace(), matrix.row_reduce()
    else:
        code_basis, dual_basis = matrix.row_reduce(), matrix.nullspace()
    in_code = code_basis.echelon()
    for v in dual_basis:
        if not in_code.contains(v):
            raise CSSConstructionException(format_bits(v, length))
    generators = [SympVector(length, v, 0) for v in dual_basis]
    generators += [SympVector(length, 0, v) for v in dual_basis]
    code = StabilizerCode(
        length,
        tuple(generators),
        name=f"css[{length},{code_basis.nrows}]",
    )
    resolve(probe).observe(CodeConstructed("css", length, len(generators)))
    return code


def classical_distance(matrix: GF2Matrix) -> int | None:
    """Minimum Hamming weight of a nonzero word of the row space, or
    ``None`` for the zero code.

    Examples:
        >>> classical_distance(GF2Matrix.from_strings(["111"]))
        3
    """
    rows = matrix.row_reduce().rows
    if not rows:
        return None
    best = matrix.ncols
    word = 0
    for i in range(1, 1 << len(rows)):
        word ^= rows[(i & -i).bit_length() - 1]
        best = min(best, word.bit_count())
    return best


def quadratic_residue_code(
    p: int, probe: Probe | None = None
) -> StabilizerCode:
    """The cyclic code on ``p`` qubits built from quadratic residues.

    Position ``j`` of the first generator has ``a_j = 1`` when ``j`` is
    a nonzero square mod ``p`` and ``b_j = 1`` when it is a nonsquare;
    position 0 is ``(0, 0)``. The remaining ``p - 2`` generators are
    its successive right shifts.

    Raises:
        QuadraticResidueException: If ``p`` is not a prime congruent
            to 5 mod 8.

    Examples:
        >>> code = quadratic_residue_code(13)
        >>> str(code.generators[0])
        '0101100001101|0010011110010'
        >>> code.k_bar
        12
    """
    if not isprime(p):
        raise QuadraticResidueException(p, "is not prime")
    if p % 8 != 5:
        raise QuadraticResidueException(p, f"is {p % 8} mod 8")
    a = [0] * p
    b = [0] * p
    for j in range(1, p):
        if is_quad_residue(j, p):
            a[j] = 1
        else:
            b[j] = 1
    first = SympVector.from_bits(a, b)
    generators = tuple(cyclic_shift(first, k) for k in range(p - 1))
    resolve(probe).observe(CodeConstructed("qr", p, len(generators)))
    return StabilizerCode(p, generators, name=f"qr{p}")

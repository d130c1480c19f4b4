from __future__ import annotations

from itertools import combinations, product

from orthocode.gf2.vector import SympVector
from orthocode.pauli.element import PauliElement, PhaseMode
from orthocode.pauli.exceptions import WeightRangeException

# (a_j, b_j) for σ_x, σ_z and σ_y = σ_xσ_z
_SINGLE_QUBIT = ((1, 0), (0, 1), (1, 1))


def weight_t_error_set(
    n: int, t: int, mode: PhaseMode = PhaseMode.REAL
) -> list[PauliElement]:
    """All ``+1``-phase elements acting on at most ``t`` qubits.

    There are ``Σ_{w≤t} C(n,w)·3^w`` of them, identity first. The
    order is by weight, then by the printed ``(a|b)`` string read as
    a binary number.

    Args:
        n (int): Qubit count.
        t (int): Maximum symplectic weight.
        mode (PhaseMode): Group the elements are created in.

    Raises:
        WeightRangeException: If ``t`` lies outside ``0..n``.

    Examples:
        >>> errors = weight_t_error_set(5, 1)
        >>> len(errors)
        16
        >>> [str(e) for e in errors[:3]]
        ['+X(00000)Z(00000)', '+X(00000)Z(00001)', '+X(00000)Z(00010)']
    """
    if not 0 <= t <= n:
        raise WeightRangeException(n, t)
    out: list[PauliElement] = []
    for w in range(t + 1):
        layer = []
        for support in combinations(range(n), w):
            for kinds in product(_SINGLE_QUBIT, repeat=w):
                a = b = 0
                for qubit, (x, z) in zip(support, kinds):
                    bit = 1 << (n - 1 - qubit)
                    a |= bit if x else 0
                    b |= bit if z else 0
                layer.append(SympVector(n, a, b))
        layer.sort(key=lambda v: v.row)
        out.extend(PauliElement(v, 0, mode) for v in layer)
    return out

from collections.abc import Sequence

from orthocode.gf2.matrix import (
    EchelonBasis,
    GF2Matrix,
    in_span,
    rank,
    symplectic_dual,
)
from orthocode.gf2.vector import (
    SympVector,
    cyclic_shift,
    quadratic_form,
    symplectic_product,
    symplectic_weight,
)

__all__: Sequence[str] = [
    "EchelonBasis",
    "GF2Matrix",
    "SympVector",
    "cyclic_shift",
    "in_span",
    "quadratic_form",
    "rank",
    "symplectic_dual",
    "symplectic_product",
    "symplectic_weight",
]

from collections.abc import Sequence

from orthocode.pauli.element import (
    PauliElement,
    PhaseMode,
    commutes,
    multiply,
)
from orthocode.pauli.error_sets import weight_t_error_set

__all__: Sequence[str] = [
    "PauliElement",
    "PhaseMode",
    "commutes",
    "multiply",
    "weight_t_error_set",
]

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt
from scipy.optimize import bisect
from scipy.special import entr

from orthocode.codes.exceptions import RateDomainException

_LOG2_3 = math.log2(3)


def binary_entropy(
    x: npt.ArrayLike,
) -> float | npt.NDArray[np.float64]:
    """``H₂(x) = -x log₂ x - (1-x) log₂(1-x)`` with ``H₂(0) = 0``.

    Examples:
        >>> float(binary_entropy(0.5))
        1.0
        >>> float(binary_entropy(0.0))
        0.0
    """
    p = np.asarray(x, dtype=np.float64)
    h = (entr(p) + entr(1.0 - p)) / math.log(2)
    return float(h) if h.ndim == 0 else h


def gv_rate(delta: float) -> float:
    """Achievable rate ``R = 1 - 2δ log₂3 - H₂(2δ)`` for codes
    correcting a fraction ``δ`` of errors.

    Raises:
        RateDomainException: If ``delta`` lies outside ``[0, 1/4)``.

    Examples:
        >>> gv_rate(0.0)
        1.0
        >>> round(gv_rate(0.05), 4)
        0.3725
    """
    if not 0.0 <= delta < 0.25:
        raise RateDomainException(delta)
    return 1.0 - 2.0 * delta * _LOG2_3 - float(binary_entropy(2.0 * delta))


def gv_rate_root(xtol: float = 1e-12) -> float:
    """The ``δ`` where the rate formula reaches zero, by bisection.

    Examples:
        >>> round(gv_rate_root(), 4)
        0.0946
    """
    return float(bisect(gv_rate, 0.0, 0.25 - xtol, xtol=xtol))

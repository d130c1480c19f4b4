from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from orthocode.codes.code import StabilizerCode
from orthocode.gf2.exceptions import DimensionException
from orthocode.gf2.vector import SympVector, cyclic_shift, symplectic_product
from orthocode.observations import CorrectabilityChecked
from orthocode.pauli.element import PauliElement
from orthocode.probes.probe import Probe, resolve


@dataclass(frozen=True)
class CorrectabilityResult:
    """Verdict of a pairwise check over an error set.

    Attributes:
        holds (bool): Whether every pair passed.
        pair (tuple[PauliElement, PauliElement] | None): The first
            failing pair in ``(i, j)`` order, ``i <= j``.
        indices (tuple[int, int] | None): Positions of that pair.
        pairs_checked (int): Unordered pairs in the error set.
    """

    holds: bool
    pair: tuple[PauliElement, PauliElement] | None = None
    indices: tuple[int, int] | None = None
    pairs_checked: int = 0

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return f"holds over {self.pairs_checked} pair(s)"
        assert self.pair is not None
        return f"fails: {self.pair[0]} and {self.pair[1]}"


def _vector(code: StabilizerCode, e: PauliElement | SympVector) -> SympVector:
    v = e.vector if isinstance(e, PauliElement) else e
    if v.n != code.n:
        raise DimensionException("syndrome", code.n, v.n)
    return v


def syndrome(
    code: StabilizerCode, e: PauliElement | SympVector
) -> tuple[int, ...]:
    # pylint: disable=line-too-long
    """``((s₁, ē), ..., (s_k, ē))``: which generators ``e``
    anticommutes with.

    Examples:
        >>> from orthocode.codes.builtins import builtin
        >>> syndrome(builtin("five_qubit"), SympVector.from_string("10000|00000"))
        (0, 1, 0, 1)
    """
    v = _vector(code, e)
    return tuple(symplectic_product(g, v) for g in code.generators)


def shifted_character(
    code: StabilizerCode, e: PauliElement | SympVector
) -> tuple[int, ...]:
    """The character of the eigenspace ``e`` maps the codespace onto:
    each sign flips where ``e`` anticommutes with the generator."""
    return tuple(
        s * (-1) ** bit for s, bit in zip(code.signs, syndrome(code, e))
    )


def _syndrome_key(code: StabilizerCode, v: SympVector) -> int:
    key = 0
    for g in code.generators:
        key = (key << 1) | symplectic_product(g, v)
    return key


def _grouped(
    code: StabilizerCode, errors: Sequence[PauliElement]
) -> tuple[list[SympVector], list[int], dict[int, list[int]]]:
    vectors = [_vector(code, e) for e in errors]
    keys = [_syndrome_key(code, v) for v in vectors]
    groups: dict[int, list[int]] = defaultdict(list)
    for i, key in enumerate(keys):
        groups[key].append(i)
    return vectors, keys, groups


def correctable(
    code: StabilizerCode,
    errors: Sequence[PauliElement],
    probe: Probe | None = None,
) -> CorrectabilityResult:
    # pylint: disable=line-too-long
    """Whether ``errors`` can be corrected: for every pair, including
    an error with itself, ``ē₁ + ē₂`` lies in ``S̄`` or outside ``S̄⊥``.

    ``ē₁ + ē₂ ∈ S̄⊥`` exactly when the two syndromes agree, so only
    errors with equal syndromes are compared further.

    Raises:
        DimensionException: If an error acts on another qubit count.

    Examples:
        >>> from orthocode.codes.builtins import builtin
        >>> from orthocode.pauli import weight_t_error_set
        >>> correctable(builtin("five_qubit"), weight_t_error_set(5, 1)).holds
        True
    """
    vectors, keys, groups = _grouped(code, errors)
    count = len(vectors)
    pairs = count * (count + 1) // 2
    result = CorrectabilityResult(True, pairs_checked=pairs)
    for i, v in enumerate(vectors):
        for j in groups[keys[i]]:
            if j < i:
                continue
            if not code.in_stabilizer(v + vectors[j]):
                result = CorrectabilityResult(
                    False, (errors[i], errors[j]), (i, j), pairs
                )
                break
        if not result.holds:
            break
    resolve(probe).observe(
        CorrectabilityChecked(code.n, count, pairs, result.holds)
    )
    return result


def nondegenerate(
    code: StabilizerCode, errors: Sequence[PauliElement]
) -> CorrectabilityResult:
    """Whether every two distinct errors have distinct syndromes, so
    each is identified by measurement alone (``ē₁ + ē₂ ∉ S̄⊥``)."""
    _, keys, groups = _grouped(code, errors)
    count = len(keys)
    pairs = count * (count - 1) // 2
    first: tuple[int, int] | None = None
    for members in groups.values():
        if len(members) > 1:
            candidate = (members[0], members[1])
            first = candidate if first is None else min(first, candidate)
    if first is None:
        return CorrectabilityResult(True, pairs_checked=pairs)
    return CorrectabilityResult(
        False, (errors[first[0]], errors[first[1]]), first, pairs
    )


def is_shift_invariant(
    code: StabilizerCode, positions: Iterable[int] | None = None, k: int = 1
) -> bool:
    """Whether shifting every generator (on ``positions`` only, when
    given) stays inside ``S̄``.

    Examples:
        >>> from orthocode.codes.builtins import builtin
        >>> is_shift_invariant(builtin("eight_qubit"), positions=range(1, 8))
        True
    """
    order = list(positions) if positions is not None else None
    return all(
        code.in_stabilizer(cyclic_shift(g, k, order))
        for g in code.generators
    )

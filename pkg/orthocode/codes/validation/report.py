from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class ViolationKind(str, Enum):
    NOT_ORTHOGONAL = "not orthogonal"
    DEPENDENT = "dependent"
    NOT_SINGULAR = "Q=1"


@dataclass(frozen=True)
class Violation:
    """One failed property, naming the generators involved (0-based).

    Examples:
        >>> print(Violation(ViolationKind.NOT_ORTHOGONAL, (0, 2)))
        not orthogonal: generators 0, 2
    """

    kind: ViolationKind
    generators: tuple[int, ...]

    def __str__(self) -> str:
        noun = "generator" if len(self.generators) == 1 else "generators"
        listed = ", ".join(str(i) for i in self.generators)
        return f"{self.kind.value}: {noun} {listed}"


@dataclass
class ValidationReport:
    """Accumulates what every validator in a chain found.

    Attributes:
        n (int): Qubit count of the checked code.
        dimension (int): Rank of the generators.
        strict (bool): Whether the quadratic form was checked.
        violations (list[Violation]): Failures in discovery order.
    """

    n: int
    dimension: int
    strict: bool
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, kind: ViolationKind, *generators: int) -> None:
        self.violations.append(Violation(kind, tuple(generators)))

    def of_kind(self, kind: ViolationKind) -> list[Violation]:
        return [v for v in self.violations if v.kind is kind]

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        head = (
            f"n={self.n} dim_S={self.dimension} "
            f"strict={'yes' if self.strict else 'no'}: "
            f"{'valid' if self.valid else 'INVALID'}"
        )
        return "\n".join([head, *(f"  {v}" for v in self.violations)])

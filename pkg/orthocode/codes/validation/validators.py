from __future__ import annotations

from itertools import combinations
from typing import TYPE_CHECKING

from orthocode.codes.validation.base_validator import BaseValidator
from orthocode.codes.validation.report import ViolationKind
from orthocode.gf2.matrix import EchelonBasis
from orthocode.gf2.vector import quadratic_form, symplectic_product

if TYPE_CHECKING:
    from orthocode.codes.code import StabilizerCode  # pragma: no cover
    from orthocode.codes.validation.report import (  # pragma: no cover
        ValidationReport,
    )


class OrthogonalityValidator(BaseValidator):
    """Reports every generator pair whose alternating form is 1.

    Examples:
        >>> from orthocode.codes.code import StabilizerCode
        >>> from orthocode.codes.validation.report import ValidationReport
        >>> code = StabilizerCode.from_strings(["10|00", "00|10"])
        >>> report = ValidationReport(2, 2, strict=False)
        >>> OrthogonalityValidator().validate(code, report)
        >>> print(report.violations[0])
        not orthogonal: generators 0, 1
    """

    def validate(
        self, code: StabilizerCode, report: ValidationReport
    ) -> None:
        gens = code.generators
        for i, j in combinations(range(len(gens)), 2):
            if symplectic_product(gens[i], gens[j]):
                report.add(ViolationKind.NOT_ORTHOGONAL, i, j)
        super().validate(code, report)


class IndependenceValidator(BaseValidator):
    """Reports each linear dependency among the generators as the set
    of generators summing to zero."""

    def validate(
        self, code: StabilizerCode, report: ValidationReport
    ) -> None:
        count = len(code.generators)
        basis = EchelonBasis((g.row for g in code.generators), 2 * code.n)
        for combo in basis.dependent:
            members = [i for i in range(count) if combo >> i & 1]
            report.add(ViolationKind.DEPENDENT, *members)
        super().validate(code, report)


class SingularityValidator(BaseValidator):
    """Checks ``Q = 0`` on each generator and on each pairwise sum.

    ``Q(u + v) = Q(u) + Q(v) + (u, v)``, so these values determine
    ``Q`` on the whole span.
    """

    def validate(
        self, code: StabilizerCode, report: ValidationReport
    ) -> None:
        gens = code.generators
        for i, g in enumerate(gens):
            if quadratic_form(g):
                report.add(ViolationKind.NOT_SINGULAR, i)
        for i, j in combinations(range(len(gens)), 2):
            if quadratic_form(gens[i] + gens[j]):
                report.add(ViolationKind.NOT_SINGULAR, i, j)
        super().validate(code, report)

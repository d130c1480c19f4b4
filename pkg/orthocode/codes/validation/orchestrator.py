from __future__ import annotations

from orthocode.codes.code import StabilizerCode
from orthocode.codes.validation.base_validator import BaseValidator
from orthocode.codes.validation.chain import ValidationChain
from orthocode.codes.validation.report import ValidationReport
from orthocode.codes.validation.validators import (
    IndependenceValidator,
    OrthogonalityValidator,
    SingularityValidator,
)
from orthocode.observations import CodeValidated
from orthocode.probes.probe import Probe, resolve


class CodeValidationOrchestrator:
    # pylint: disable=line-too-long
    """Runs a chain of validators over a code and returns the report.

    The chain starts with :attr:`DEFAULT_VALIDATORS`; strict mode
    appends :attr:`STRICT_VALIDATORS`, which check that ``S̄`` is
    totally singular and not merely self-orthogonal.

    Args:
        strict (bool): Also check the quadratic form.
        chain (ValidationChain | None, optional): A custom chain. If
            not provided, a default chain is created.

    Examples:
        >>> orchestrator = CodeValidationOrchestrator(strict=True)
        >>> orchestrator
        CodeValidationOrchestrator(ValidationChain([OrthogonalityValidator, IndependenceValidator, SingularityValidator]))
    """

    DEFAULT_VALIDATORS: tuple[type[BaseValidator], ...] = (
        OrthogonalityValidator,
        IndependenceValidator,
    )
    STRICT_VALIDATORS: tuple[type[BaseValidator], ...] = (
        SingularityValidator,
    )

    def __init__(
        self, strict: bool = True, chain: ValidationChain | None = None
    ) -> None:
        self.strict = strict
        self._chain = chain if chain is not None else ValidationChain()
        self.register(*self.DEFAULT_VALIDATORS)
        if strict:
            self.register(*self.STRICT_VALIDATORS)

    def register(
        self, *validators: type[BaseValidator]
    ) -> CodeValidationOrchestrator:
        """Appends instances of ``validators`` to the chain."""
        self._chain.extend(v() for v in validators)
        return self

    def validate(self, code: StabilizerCode) -> ValidationReport:
        report = ValidationReport(code.n, code.k_bar, self.strict)
        return self._chain.validate_chain(code, report)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self._chain!r})"


def validate(
    code: StabilizerCode, strict: bool = True, probe: Probe | None = None
) -> ValidationReport:
    """Checks pairwise orthogonality and independence of the
    generators and, when ``strict``, that ``Q`` vanishes on ``S̄``.

    Args:
        code (StabilizerCode): The code to check.
        strict (bool): Require a totally singular ``S̄``.
        probe (Probe | None): Receives a :class:`CodeValidated`
            observation.

    Returns:
        ValidationReport: Every violation found.

    Examples:
        >>> code = StabilizerCode.from_strings(["10000|10000"])
        >>> validate(code, strict=True).valid
        False
        >>> validate(code, strict=False).valid
        True
    """
    report = CodeValidationOrchestrator(strict).validate(code)
    resolve(probe).observe(
        CodeValidated(
            code.n, report.dimension, strict, len(report.violations)
        )
    )
    return report

from collections.abc import Sequence

from orthocode.codes.validation.base_validator import BaseValidator
from orthocode.codes.validation.chain import ValidationChain
from orthocode.codes.validation.orchestrator import (
    CodeValidationOrchestrator,
    validate,
)
from orthocode.codes.validation.report import (
    ValidationReport,
    Violation,
    ViolationKind,
)
from orthocode.codes.validation.validators import (
    IndependenceValidator,
    OrthogonalityValidator,
    SingularityValidator,
)

__all__: Sequence[str] = [
    "BaseValidator",
    "CodeValidationOrchestrator",
    "IndependenceValidator",
    "OrthogonalityValidator",
    "SingularityValidator",
    "ValidationChain",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "validate",
]

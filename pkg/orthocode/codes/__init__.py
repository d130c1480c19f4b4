from collections.abc import Sequence

from orthocode.codes.bounds import binary_entropy, gv_rate, gv_rate_root
from orthocode.codes.builtins import BuiltinCode, builtin
from orthocode.codes.code import StabilizerCode
from orthocode.codes.constructions import (
    classical_distance,
    css_from_classical,
    quadratic_residue_code,
)
from orthocode.codes.correctability import (
    CorrectabilityResult,
    correctable,
    is_shift_invariant,
    nondegenerate,
    shifted_character,
    syndrome,
)
from orthocode.codes.distance import DistanceReport, distance
from orthocode.codes.encoding import canonical_subspace, synthesize_encoding
from orthocode.codes.io import (
    format_code,
    parse_classical,
    parse_code,
    read_classical,
    read_code,
    write_code,
)
from orthocode.codes.validation import (
    ValidationReport,
    Violation,
    ViolationKind,
    validate,
)

__all__: Sequence[str] = [
    "BuiltinCode",
    "CorrectabilityResult",
    "DistanceReport",
    "StabilizerCode",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "binary_entropy",
    "builtin",
    "canonical_subspace",
    "classical_distance",
    "correctable",
    "css_from_classical",
    "distance",
    "format_code",
    "gv_rate",
    "gv_rate_root",
    "is_shift_invariant",
    "nondegenerate",
    "parse_classical",
    "parse_code",
    "quadratic_residue_code",
    "read_classical",
    "read_code",
    "shifted_character",
    "syndrome",
    "synthesize_encoding",
    "validate",
    "write_code",
]

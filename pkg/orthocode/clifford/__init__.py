from collections.abc import Sequence

from orthocode.clifford.action import (
    Gate,
    GateKind,
    SympMatrix,
    compose,
    symplectic_gram,
)
from orthocode.clifford.generators import (
    diag_action,
    diag_action_complex,
    gl_action,
    hadamard_all,
    hadamard_single,
    realize,
)
from orthocode.clifford.suite import (
    SuiteEntry,
    SuiteResult,
    form_preservation_suite,
)
from orthocode.clifford.words import format_word, parse_word, word_matrix

__all__: Sequence[str] = [
    "Gate",
    "GateKind",
    "SuiteEntry",
    "SuiteResult",
    "SympMatrix",
    "compose",
    "diag_action",
    "diag_action_complex",
    "form_preservation_suite",
    "format_word",
    "gl_action",
    "hadamard_all",
    "hadamard_single",
    "parse_word",
    "realize",
    "symplectic_gram",
    "word_matrix",
]

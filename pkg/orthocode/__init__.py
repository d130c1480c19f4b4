from collections.abc import Sequence

from orthocode.clifford import (
    Gate,
    SympMatrix,
    diag_action,
    diag_action_complex,
    form_preservation_suite,
    gl_action,
    hadamard_all,
    hadamard_single,
)
from orthocode.codes import (
    DistanceReport,
    StabilizerCode,
    builtin,
    correctable,
    css_from_classical,
    distance,
    gv_rate,
    quadratic_residue_code,
    read_code,
    synthesize_encoding,
    validate,
    write_code,
)
from orthocode.gf2 import GF2Matrix, SympVector
from orthocode.pauli import PauliElement, PhaseMode, weight_t_error_set
from orthocode.probes import (
    BaseObservation,
    BasicDispatcher,
    Probe,
    announcement,
    get_probe,
    probe,
)
from orthocode.statevector import (
    StateVector,
    apply_pauli,
    codespace_basis,
    verify_kl_conditions,
)

__all__: Sequence[str] = [
    "BaseObservation",
    "BasicDispatcher",
    "DistanceReport",
    "GF2Matrix",
    "Gate",
    "PauliElement",
    "PhaseMode",
    "Probe",
    "StabilizerCode",
    "StateVector",
    "SympMatrix",
    "SympVector",
    "announcement",
    "apply_pauli",
    "builtin",
    "codespace_basis",
    "correctable",
    "css_from_classical",
    "diag_action",
    "diag_action_complex",
    "distance",
    "form_preservation_suite",
    "get_probe",
    "gl_action",
    "gv_rate",
    "hadamard_all",
    "hadamard_single",
    "probe",
    "quadratic_residue_code",
    "read_code",
    "synthesize_encoding",
    "validate",
    "verify_kl_conditions",
    "weight_t_error_set",
    "write_code",
]

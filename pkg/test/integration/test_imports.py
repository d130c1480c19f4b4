import importlib

import pytest

import orthocode

PUBLIC = [
    ("BaseObservation", "orthocode.probes.observation"),
    ("BasicDispatcher", "orthocode.probes.dispatcher"),
    ("DistanceReport", "orthocode.codes.distance"),
    ("GF2Matrix", "orthocode.gf2.matrix"),
    ("Gate", "orthocode.clifford.action"),
    ("PauliElement", "orthocode.pauli.element"),
    ("PhaseMode", "orthocode.pauli.element"),
    ("Probe", "orthocode.probes.probe"),
    ("StabilizerCode", "orthocode.codes.code"),
    ("StateVector", "orthocode.statevector.state"),
    ("SympMatrix", "orthocode.clifford.action"),
    ("SympVector", "orthocode.gf2.vector"),
    ("announcement", "orthocode.probes.announcement"),
    ("apply_pauli", "orthocode.statevector.state"),
    ("builtin", "orthocode.codes.builtins"),
    ("codespace_basis", "orthocode.statevector.codespace"),
    ("correctable", "orthocode.codes.correctability"),
    ("css_from_classical", "orthocode.codes.constructions"),
    ("diag_action", "orthocode.clifford.generators"),
    ("diag_action_complex", "orthocode.clifford.generators"),
    ("distance", "orthocode.codes.distance"),
    ("form_preservation_suite", "orthocode.clifford.suite"),
    ("get_probe", "orthocode.probes.probe"),
    ("gl_action", "orthocode.clifford.generators"),
    ("gv_rate", "orthocode.codes.bounds"),
    ("hadamard_all", "orthocode.clifford.generators"),
    ("hadamard_single", "orthocode.clifford.generators"),
    ("probe", "orthocode.probes.probe"),
    ("quadratic_residue_code", "orthocode.codes.constructions"),
    ("read_code", "orthocode.codes.io"),
    ("synthesize_encoding", "orthocode.codes.encoding"),
    ("validate", "orthocode.codes.validation.orchestrator"),
    ("verify_kl_conditions", "orthocode.statevector.kl"),
    ("weight_t_error_set", "orthocode.pauli.error_sets"),
    ("write_code", "orthocode.codes.io"),
]


class TestPublicImports:

    @pytest.mark.parametrize("name,module", PUBLIC)
    def test_alias(self, name, module):
        # Arrange
        source = importlib.import_module(module)
        # Act
        alias = getattr(orthocode, name)
        # Assert
        assert alias is getattr(source, name)

    def test_all_is_complete(self):
        # Act + Assert
        assert set(orthocode.__all__) == {name for name, _ in PUBLIC}

    @pytest.mark.parametrize(
        "package",
        [
            "orthocode.gf2",
            "orthocode.pauli",
            "orthocode.codes",
            "orthocode.clifford",
            "orthocode.statevector",
            "orthocode.probes",
        ],
    )
    def test_subpackage_all_resolves(self, package):
        # Arrange
        module = importlib.import_module(package)
        # Act + Assert
        for name in module.__all__:
            assert hasattr(module, name), name

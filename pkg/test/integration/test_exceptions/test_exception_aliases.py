import importlib

import pytest

import orthocode.exceptions
from orthocode.base_exc import OrthocodeException

ALIASES = [
    ("ConfigException", "orthocode.config"),
    ("GF2Exception", "orthocode.gf2.exceptions"),
    ("DimensionException", "orthocode.gf2.exceptions"),
    ("SingularMatrixException", "orthocode.gf2.exceptions"),
    ("BitStringException", "orthocode.gf2.vector"),
    ("PauliException", "orthocode.pauli.exceptions"),
    ("PauliModeException", "orthocode.pauli.exceptions"),
    ("PauliParseException", "orthocode.pauli.exceptions"),
    ("WeightRangeException", "orthocode.pauli.exceptions"),
    ("CodeException", "orthocode.codes.exceptions"),
    ("UnknownCodeException", "orthocode.codes.exceptions"),
    ("CodeFormatException", "orthocode.codes.exceptions"),
    ("CSSConstructionException", "orthocode.codes.exceptions"),
    ("QuadraticResidueException", "orthocode.codes.exceptions"),
    ("InvalidCodeException", "orthocode.codes.exceptions"),
    ("SearchSpaceTooLargeException", "orthocode.codes.exceptions"),
    ("RateDomainException", "orthocode.codes.exceptions"),
    ("ValidationChainException", "orthocode.codes.validation.chain"),
    ("InvalidLinkException", "orthocode.codes.validation.chain"),
    ("EmptyChainException", "orthocode.codes.validation.chain"),
    ("CliffordException", "orthocode.clifford.exceptions"),
    ("NonSymmetricMatrixException", "orthocode.clifford.exceptions"),
    ("QubitIndexException", "orthocode.clifford.exceptions"),
    ("WordFormatException", "orthocode.clifford.exceptions"),
    ("StateVectorException", "orthocode.statevector.exceptions"),
    ("StateSizeException", "orthocode.statevector.exceptions"),
    ("ConsistencyException", "orthocode.statevector.exceptions"),
    ("CodewordFormatException", "orthocode.statevector.exceptions"),
    ("ProbeException", "orthocode.probes.exceptions"),
    ("ReqInstrumException", "orthocode.probes.exceptions"),
]


class TestExceptionAliases:

    @pytest.mark.parametrize("name,module", ALIASES)
    def test_alias(self, name, module):
        # Arrange
        source = importlib.import_module(module)
        # Act
        alias = getattr(orthocode.exceptions, name)
        # Assert
        assert alias is getattr(source, name)

    @pytest.mark.parametrize("name,_", ALIASES)
    def test_derives_from_base(self, name, _):
        # Act
        exc_cls = getattr(orthocode.exceptions, name)
        # Assert
        assert issubclass(exc_cls, OrthocodeException)

    def test_every_export_is_covered(self):
        # Act
        exported = set(orthocode.exceptions.__all__)
        # Assert
        assert exported == {name for name, _ in ALIASES} | {
            "OrthocodeException"
        }

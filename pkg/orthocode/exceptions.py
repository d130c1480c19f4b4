from collections.abc import Sequence

from orthocode.base_exc import OrthocodeException
from orthocode.clifford.exceptions import (
    CliffordException,
    NonSymmetricMatrixException,
    QubitIndexException,
    WordFormatException,
)
from orthocode.codes.exceptions import (
    CodeException,
    CodeFormatException,
    CSSConstructionException,
    InvalidCodeException,
    QuadraticResidueException,
    RateDomainException,
    SearchSpaceTooLargeException,
    UnknownCodeException,
)
from orthocode.codes.validation.chain import (
    EmptyChainException,
    InvalidLinkException,
    ValidationChainException,
)
from orthocode.config import ConfigException
from orthocode.gf2.exceptions import (
    DimensionException,
    GF2Exception,
    SingularMatrixException,
)
from orthocode.gf2.vector import BitStringException
from orthocode.pauli.exceptions import (
    PauliException,
    PauliModeException,
    PauliParseException,
    WeightRangeException,
)
from orthocode.probes.exceptions import ProbeException, ReqInstrumException
from orthocode.statevector.exceptions import (
    CodewordFormatException,
    ConsistencyException,
    StateSizeException,
    StateVectorException,
)

__all__: Sequence[str] = [
    "OrthocodeException",
    "ConfigException",
    "GF2Exception",
    "DimensionException",
    "SingularMatrixException",
    "BitStringException",
    "PauliException",
    "PauliModeException",
    "PauliParseException",
    "WeightRangeException",
    "CodeException",
    "UnknownCodeException",
    "CodeFormatException",
    "CSSConstructionException",
    "QuadraticResidueException",
    "InvalidCodeException",
    "SearchSpaceTooLargeException",
    "RateDomainException",
    "ValidationChainException",
    "InvalidLinkException",
    "EmptyChainException",
    "CliffordException",
    "NonSymmetricMatrixException",
    "QubitIndexException",
    "WordFormatException",
    "StateVectorException",
    "StateSizeException",
    "ConsistencyException",
    "CodewordFormatException",
    "ProbeException",
    "ReqInstrumException",
]

from collections.abc import Sequence

from orthocode.probes.announcement import announcement
from orthocode.probes.dispatcher import BasicDispatcher
from orthocode.probes.observation import BaseObservation
from orthocode.probes.probe import Probe, get_probe, probe

__all__: Sequence[str] = [
    "announcement",
    "BasicDispatcher",
    "BaseObservation",
    "get_probe",
    "probe",
    "Probe",
]

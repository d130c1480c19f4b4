from __future__ import annotations

import logging
from typing import Any

from orthocode.probes.dispatcher import BasicDispatcher, DispatcherProtocol
from orthocode.probes.observation import ObservationProtocol

LOGGER_NAME = "orthocode"


class Probe:
    """Hands domain observations to a dispatcher.

    Library code builds an observation describing what happened and
    calls :meth:`observe`; how it is rendered is up to the
    instruments registered with the dispatcher.

    Args:
        dispatcher (DispatcherProtocol): Routes observations to
            instruments.

    Example:
        >>> import logging
        >>> from orthocode.probes import announcement, BaseObservation
        >>>
        >>> class SomeInstrument:
        ...     def call(self, msg: str) -> None:
        ...         print(msg)
        ...
        >>> class SampleObservation(BaseObservation):
        ...     @announcement(SomeInstrument)
        ...     def announce(self, instrument: SomeInstrument) -> None:
        ...         instrument.call("Announcement!")
        ...
        >>> Probe(BasicDispatcher(SomeInstrument())).observe(
        ...     SampleObservation()
        ... )
        Announcement!
    """

    def __init__(self, dispatcher: DispatcherProtocol) -> None:
        self.dispatcher = dispatcher

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, type(self)):
            return False
        return self.dispatcher == other.dispatcher

    def __hash__(self) -> int:
        return hash(self.dispatcher)

    def observe(self, observation: ObservationProtocol) -> None:
        """Dispatches an observation using the associated dispatcher."""
        self.dispatcher.dispatch(observation)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(dispatcher={self.dispatcher!r})"


def get_probe(*instruments: Any) -> Probe:
    # pylint: disable=line-too-long
    """Creates a `Probe` for the given instruments.

    Without instruments the package logger ``orthocode`` is used. No
    handler is attached here; applications (and the command line)
    configure logging themselves.

    Example:
        >>> get_probe()
        Probe(dispatcher=BasicDispatcher(instruments=('<Logger orthocode (WARNING)>',)))
    """
    if not instruments:
        instruments = (logging.getLogger(LOGGER_NAME),)
    return Probe(BasicDispatcher(*instruments))


probe = get_probe()
"""The default probe, backed by the ``orthocode`` logger."""


def resolve(candidate: Probe | None) -> Probe:
    """``candidate`` or the default probe."""
    return candidate if candidate is not None else probe

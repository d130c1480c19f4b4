from __future__ import annotations

from collections.abc import Iterator, Sequence
from typing import Any, Protocol, runtime_checkable

from orthocode.probes.announcement import AnnouncementEntry, entries
from orthocode.probes.exceptions import ReqInstrumException
from orthocode.probes.observation import ObservationProtocol


# pylint: disable=too-few-public-methods
@runtime_checkable
class DispatcherProtocol(Protocol):
    """Anything that can route an observation to instruments."""

    def dispatch(self, observation: ObservationProtocol) -> None:
        """Deliver ``observation`` to the registered instruments."""


class InstrumentRegistry(Sequence[Any]):
    """Registered instruments, indexed by their exact type.

    When several instruments share a type the first one registered
    answers lookups for it. Subclass instances do not match.

    Args:
        *instruments (Any): Instrument instances, in registration order.

    Examples:
        >>> import logging
        >>> logger = logging.getLogger("orthocode.doctest")
        >>> registry = InstrumentRegistry(logger)
        >>> registry.lookup(logging.Logger) is logger
        True
        >>> print(registry.lookup(object))
        None
    """

    def __init__(self, *instruments: Any) -> None:
        self._instruments = instruments
        self._by_type: dict[type[Any], Any] = {}
        for instrument in instruments:
            self._by_type.setdefault(type(instrument), instrument)

    def __getitem__(self, index: Any) -> Any:
        return self._instruments[index]

    def __len__(self) -> int:
        return len(self._instruments)

    def __iter__(self) -> Iterator[Any]:
        return iter(self._instruments)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, InstrumentRegistry):
            return NotImplemented
        return self._instruments == other._instruments

    def __hash__(self) -> int:
        return hash(self._instruments)

    def lookup(self, instrument_cls: type[Any], required: bool = False) -> Any:
        """The instrument registered for exactly ``instrument_cls``.

        Raises:
            KeyError: If ``required`` and no such instrument exists.
        """
        if required:
            return self._by_type[instrument_cls]
        return self._by_type.get(instrument_cls)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(types={len(self._by_type)})"


class BasicDispatcher(DispatcherProtocol):
    """Calls every announcement of an observation with the matching
    registered instrument.

    Announcements whose instrument is missing are skipped unless the
    announcement marked it as required.

    Args:
        *instruments (Any): Instrument instances.
    """

    def __init__(self, *instruments: Any) -> None:
        self.registry = InstrumentRegistry(*instruments)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, BasicDispatcher):
            return NotImplemented
        return self.registry == other.registry

    def __hash__(self) -> int:
        return hash(self.registry)

    def _resolve(
        self,
        observation: ObservationProtocol,
        name: str,
        entry: AnnouncementEntry,
    ) -> Any:
        try:
            return self.registry.lookup(entry.instrument_cls, entry.required)
        except KeyError as e:
            raise ReqInstrumException(
                observation,  # type: ignore[arg-type]
                name,
                entry.instrument_cls,
                *self.registry,
            ) from e

    def dispatch(self, observation: ObservationProtocol) -> None:
        """Dispatch ``observation`` to all applicable instruments.

        Raises:
            ReqInstrumException: If a required instrument is missing.
        """
        for name, method in observation.announcements():
            for entry in entries(method):
                instrument = self._resolve(observation, name, entry)
                if instrument is not None:
                    method(observation, instrument)

    def __repr__(self) -> str:
        shown = tuple(repr(i) for i in self.registry)
        return f"{type(self).__name__}(instruments={shown})"

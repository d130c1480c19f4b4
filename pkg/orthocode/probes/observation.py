from __future__ import annotations

import inspect
from abc import ABC
from collections.abc import Callable
from typing import Any, ClassVar, Protocol, runtime_checkable

from orthocode.probes.announcement import METADATA_ATTR

_Announcements = tuple[tuple[str, Callable[..., Any]], ...]


# pylint: disable=too-few-public-methods
@runtime_checkable
class ObservationProtocol(Protocol):
    """Structure of a domain observation: something that can list its
    announcement methods."""

    @classmethod
    def announcements(cls) -> _Announcements:
        """Announcement methods as ``(name, function)`` pairs."""


class BaseObservation(ABC):
    """Base class for the package's domain observations.

    Subclasses describe one event with plain attributes and one or
    more ``@announcement`` methods rendering it for an instrument.

    Examples:
        >>> import logging
        >>> from orthocode.probes.announcement import announcement
        >>>
        >>> class Finished(BaseObservation):
        ...     @announcement(logging.Logger)
        ...     def log(self, logger: logging.Logger) -> None:
        ...         logger.info("finished")
        ...
        >>> Finished()
        Finished(announcements=1)
    """

    # per concrete class, filled on first use
    _announcements: ClassVar[_Announcements | None] = None

    @classmethod
    def announcements(cls) -> _Announcements:
        """Announcement methods defined on the class, sorted by name.

        Returns:
            tuple[tuple[str, Callable[..., Any]], ...]: Name and
                function of each announcement.
        """
        cached = cls.__dict__.get("_announcements")
        if cached is None:
            cached = tuple(
                (name, meth)
                for name, meth in inspect.getmembers(cls, inspect.isfunction)
                if getattr(meth, METADATA_ATTR, None)
            )
            cls._announcements = cached
        return cached

    def __len__(self) -> int:
        return len(self.announcements())

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(announcements={len(self)})"

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from typing import Any, TypeVar

_Meth = TypeVar("_Meth", bound=Callable[..., Any])


@dataclass(frozen=True)
class AnnouncementEntry:
    """One instrument an announcement method supports.

    Args:
        instrument_cls (type[Any]): Instrument type the method is
            called with.
        required (bool): Whether dispatching fails when no instrument
            of this type is registered.
    """

    instrument_cls: type[Any]
    required: bool


# Attribute on the plain function where entries are recorded.
METADATA_ATTR = "__announcement_metadata__"


def entries(method: Callable[..., Any]) -> Iterator[AnnouncementEntry]:
    """Yields the entries recorded on ``method``, innermost decorator
    first."""
    yield from tuple(getattr(method, METADATA_ATTR, ()))


class announcement:  # pylint: disable=invalid-name
    # pylint: disable=line-too-long
    """Marks an observation method as an announcement for an
    instrument type.

    The decorator can be stacked to support several instrument types
    with one method. The method is left unwrapped; the dispatcher
    calls it as ``method(observation, instrument)``.

    Args:
        instrument (type[Any]): Instrument class the method expects.
        required (bool): Fail dispatching when the instrument is
            missing. Defaults to `False`.

    Examples:
        >>> import logging
        >>> class Obs:
        ...     @announcement(logging.Logger)
        ...     def log(self, logger: logging.Logger) -> None:
        ...         logger.info("hello")
        ...
        >>> list(entries(Obs.log))
        [AnnouncementEntry(instrument_cls=<class 'logging.Logger'>, required=False)]
    """

    def __init__(self, instrument: type[Any], required: bool = False) -> None:
        self.instrument = instrument
        self.required = required

    def __call__(self, method: _Meth) -> _Meth:
        recorded = list(entries(method))
        recorded.append(AnnouncementEntry(self.instrument, self.required))
        setattr(method, METADATA_ATTR, recorded)
        return method

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(instrument={self.instrument!r})"

from __future__ import annotations

from typing import TYPE_CHECKING, Any

from orthocode.base_exc import OrthocodeException

if TYPE_CHECKING:
    from orthocode.probes.observation import (  # pragma: no cover
        BaseObservation,
    )


class ProbeException(OrthocodeException):
    """Base exception for errors occurring while dispatching
    observations.
    """


class ReqInstrumException(ProbeException):
    """Exception raised when an announcement marks its instrument as
    required and the dispatcher holds no instrument of that type.

    Args:
        observation (BaseObservation): The observation being
            dispatched.
        method_name (str): Name of the announcement method.
        req_instrum (type[Any]): The instrument type that was expected.
        *instrum_imps (Any): The instruments available at the time.
    """

    def __init__(
        self,
        observation: BaseObservation,
        method_name: str,
        req_instrum: type[Any],
        *instrum_imps: Any,
    ) -> None:
        self.observation = observation
        self.method_name = method_name
        self.req_instrum = req_instrum
        self.instrum_imps = instrum_imps
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message for the exception.

        Returns:
            str: The missing instrument, the announcement that wanted
                it and the implementations that were available.
        """
        obs_meth = (
            f"{self.observation.__class__.__name__}.{self.method_name}(...)"
        )
        imps_str = ", ".join(f"`{i!r}`" for i in self.instrum_imps)
        return (
            f"Required instrument `{self.req_instrum.__name__}` in "
            f"`{obs_meth}` is missing from available implementations: "
            f"{imps_str or None}"
        )

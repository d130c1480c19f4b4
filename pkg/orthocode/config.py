from __future__ import annotations

import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass

from orthocode.base_exc import OrthocodeException

WORKERS_ENV = "ORTHOCODE_WORKERS"
LOG_LEVEL_ENV = "ORTHOCODE_LOG_LEVEL"


class ConfigException(OrthocodeException):
    # pylint: disable=line-too-long
    """Exception raised when an environment setting has an invalid
    value.

    Args:
        variable (str): Name of the environment variable.
        value (str): The value found.
        reason (str): What a valid value looks like.

    Examples:
        >>> try:
        ...     raise ConfigException("ORTHOCODE_WORKERS", "0", "expected an integer >= 1")
        ... except ConfigException as e:
        ...     print(f"Error: {e}")
        ...
        Error: ORTHOCODE_WORKERS='0': expected an integer >= 1
    """

    def __init__(self, variable: str, value: str, reason: str) -> None:
        self.variable = variable
        self.value = value
        self.reason = reason
        super().__init__(self.msg)

    @property
    def msg(self) -> str:
        """Constructs a descriptive error message.

        Returns:
            str: The variable, its value and the expectation.
        """
        return f"{self.variable}={self.value!r}: {self.reason}"


@dataclass(frozen=True)
class Settings:
    """Process-wide defaults read from the environment.

    Command-line flags take precedence over these values.

    Attributes:
        workers (int): Default thread count for the distance search.
        log_level (int): Level of the command-line log handler.

    Examples:
        >>> Settings.from_env({"ORTHOCODE_WORKERS": "4"})
        Settings(workers=4, log_level=30)
    """

    workers: int = 1
    log_level: int = logging.WARNING

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> Settings:
        """Reads ``ORTHOCODE_WORKERS`` and ``ORTHOCODE_LOG_LEVEL``.

        Raises:
            ConfigException: If a value cannot be used.
        """
        env = os.environ if environ is None else environ
        return cls(_workers(env), _log_level(env))


def _workers(env: Mapping[str, str]) -> int:
    raw = env.get(WORKERS_ENV)
    if raw is None or not raw.strip():
        return 1
    try:
        workers = int(raw)
    except ValueError:
        workers = 0
    if workers < 1:
        raise ConfigException(WORKERS_ENV, raw, "expected an integer >= 1")
    return workers


def _log_level(env: Mapping[str, str]) -> int:
    raw = env.get(LOG_LEVEL_ENV)
    if raw is None or not raw.strip():
        return logging.WARNING
    level = logging.getLevelName(raw.strip().upper())
    if not isinstance(level, int):
        raise ConfigException(
            LOG_LEVEL_ENV, raw, "expected a logging level name"
        )
    return level

"""Domain observations announced through :mod:`orthocode.probes`."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from orthocode.probes import BaseObservation, announcement


@dataclass(frozen=True)
class CodeValidated(BaseObservation):
    n: int
    dimension: int
    strict: bool
    violations: int

    @announcement(logging.Logger)
    def log(self, logger: logging.Logger) -> None:
        level = logging.INFO if not self.violations else logging.WARNING
        logger.log(
            level,
            "Validated n=%d dim_S=%d strict=%s: %d violation(s)",
            self.n,
            self.dimension,
            self.strict,
            self.violations,
        )


@dataclass(frozen=True)
class CodeConstructed(BaseObservation):
    kind: str
    n: int
    generators: int

    @announcement(logging.Logger)
    def log(self, logger: logging.Logger) -> None:
        logger.info(
            "Constructed %s code: n=%d with %d generator(s)",
            self.kind,
            self.n,
            self.generators,
        )


@dataclass(frozen=True)
class DistanceSearchStarted(BaseObservation):
    n: int
    dual_dimension: int
    vectors: int
    workers: int

    @announcement(logging.Logger)
    def log(self, logger: logging.Logger) -> None:
        logger.info(
            "Distance search: n=%d, dim S-perp=%d, %d vector(s), "
            "%d worker(s)",
            self.n,
            self.dual_dimension,
            self.vectors,
            self.workers,
        )


@dataclass(frozen=True)
class DistanceBudgetExhausted(BaseObservation):
    budget: int
    total: int

    @announcement(logging.Logger)
    def log(self, logger: logging.Logger) -> None:
        logger.warning(
            "Scan budget %d below %d nonzero vector(s); minima are "
            "upper bounds only",
            self.budget,
            self.total,
        )


@dataclass(frozen=True)
class DistanceSearchFinished(BaseObservation):
    n: int
    min_weight_dual: int | None
    min_weight_dual_minus_stabilizer: int | None
    vectors_scanned: int
    seconds: float

    @announcement(logging.Logger)
    def log(self, logger: logging.Logger) -> None:
        logger.info(
            "Distance search done: d_dual=%s d_dual_minus_S=%s after %d "
            "vector(s) in %.3fs",
            self.min_weight_dual,
            self.min_weight_dual_minus_stabilizer,
            self.vectors_scanned,
            self.seconds,
        )


@dataclass(frozen=True)
class CorrectabilityChecked(BaseObservation):
    n: int
    errors: int
    pairs: int
    holds: bool

    @announcement(logging.Logger)
    def log(self, logger: logging.Logger) -> None:
        logger.info(
            "Membership criterion over %d error(s), %d pair(s): %s",
            self.errors,
            self.pairs,
            "holds" if self.holds else "fails",
        )


@dataclass(frozen=True)
class EncodingSynthesised(BaseObservation):
    n: int
    dimension: int
    word_length: int

    @announcement(logging.Logger)
    def log(self, logger: logging.Logger) -> None:
        logger.info(
            "Encoder for n=%d dim_S=%d uses %d generator(s)",
            self.n,
            self.dimension,
            self.word_length,
        )


@dataclass(frozen=True)
class KnillLaflammeChecked(BaseObservation):
    n: int
    errors: int
    products: int
    holds: bool

    @announcement(logging.Logger)
    def log(self, logger: logging.Logger) -> None:
        logger.info(
            "State-vector conditions over %d error(s), %d distinct "
            "product(s): %s",
            self.errors,
            self.products,
            "hold" if self.holds else "fail",
        )

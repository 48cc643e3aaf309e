"""
Base Suite Interface
Defines the contract for all verification suites (fast, oracle, advisory)
"""

from __future__ import annotations

import logging
import math
import time
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

logger = logging.getLogger(__name__)


class SuiteTier(Enum):
    """Suite classification by cost and authority"""

    FAST = "fast"  # Closed-form evaluations only
    ORACLE = "oracle"  # Attractor sampling or hull construction
    ADVISORY = "advisory"  # Reported, never fails a run


@dataclass
class SuiteResult:
    """
    Standardized result format for all suites.

    Attributes:
        value: Suite output (counts, maxima, first failing instance)
        passed: Whether every checked instance held
        latency_ms: Execution time in milliseconds
        metadata: Optional inputs and settings used
        error: Optional error message if execution failed
        advisory: Result is informational and cannot fail a run
    """

    value: Any
    passed: bool
    latency_ms: float
    metadata: dict[str, Any] = field(default_factory=dict)
    error: str | None = None
    advisory: bool = False

    @property
    def success(self) -> bool:
        """Check if suite execution finished without raising"""
        return self.error is None

    @property
    def blocking_failure(self) -> bool:
        """Failures that should turn the run's exit status non-zero"""
        return not self.advisory and not self.passed

    def to_dict(self) -> dict[str, Any]:
        return {
            'value': self.value,
            'passed': self.passed,
            'latency_ms': self.latency_ms,
            'metadata': self.metadata,
            'error': self.error,
            'advisory': self.advisory,
        }


class BaseSuite(ABC):
    """
    Abstract base class for verification suites.

    Subclasses implement evaluate(); execute() adds timing and turns any
    exception into a failed SuiteResult.
    """

    # Class attributes (override in subclasses)
    name: str = "base_suite"
    aliases: tuple[str, ...] = ()
    version: str = "1.0.0"
    tier: SuiteTier = SuiteTier.FAST
    description: str = "Base suite (override in subclass)"

    def execute(self, **kwargs: Any) -> SuiteResult:
        """
        Run the suite.

        Args:
            **kwargs: etas, cells, depth (each optional; suites pick defaults)

        Returns:
            SuiteResult with value, pass flag and metadata
        """
        start_time = time.perf_counter()
        advisory = self.tier is SuiteTier.ADVISORY

        try:
            passed, value, metadata = self.evaluate(**kwargs)
            latency_ms = (time.perf_counter() - start_time) * 1000
            logger.debug("suite %s finished in %.1f ms (passed=%s)", self.name, latency_ms, passed)
            return SuiteResult(
                value=value,
                passed=True if advisory else passed,
                latency_ms=round(latency_ms, 2),
                metadata=metadata,
                advisory=advisory,
            )

        except Exception as e:
            latency_ms = (time.perf_counter() - start_time) * 1000
            logger.warning("suite %s raised: %s", self.name, e)
            return SuiteResult(
                value=None,
                passed=advisory,
                latency_ms=round(latency_ms, 2),
                error=f"{type(e).__name__}: {e}",
                advisory=advisory,
            )

    @abstractmethod
    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        """
        Core check logic.

        Returns:
            (passed, value, metadata)
        """

    def get_schema(self) -> dict[str, Any]:
        """JSON-Schema of the accepted keyword arguments"""
        return {
            "name": self.name,
            "description": self.description,
            "parameters": {
                "type": "object",
                "properties": {
                    "etas": {"type": "array", "items": {"type": "number"}},
                    "cells": {"type": "array", "items": {"type": "integer", "minimum": 4}},
                    "depth": {"type": "integer", "minimum": 1, "maximum": 26},
                },
                "required": [],
            },
        }

    def __str__(self) -> str:
        return f"{self.name} v{self.version} ({self.tier.value})"

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}: {self.name}>"


def spread_etas(count: int, low: float = 0.05, high: float = math.pi / 3 - 0.05) -> list[float]:
    """count evenly spaced eta values over [low, high]."""
    if count == 1:
        return [low]
    return [low + (high - low) * i / (count - 1) for i in range(count)]


def pick(kwargs: dict[str, Any], key: str, default: Sequence[Any]) -> list[Any]:
    """Suite input from kwargs, or the suite default when absent or empty."""
    value = kwargs.get(key)
    return list(value) if value else list(default)

"""Numeric defaults and per-run configuration."""

from __future__ import annotations

import logging
import math
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent / "data" / "defaults.yaml"


class Settings(BaseModel):
    """Library-wide numeric defaults, optionally overridden from YAML."""

    depth: int = 20
    min_depth: int = 1
    max_depth: int = 26
    tol: float = 1e-9
    boundary_tol: float = 1e-9
    identity_tol: float = 1e-12
    bisection_width: float = 1e-13
    bisection_max_iter: int = 200
    # Phi_4 vanishes at pi/3, which is outside the parameter domain
    eta4_upper_margin: float = 1e-6
    grid_points: int = 100
    grid_margin: float = 1e-6
    segment_samples: int = Field(default=1000, ge=2)
    positivity_tol: float = 1e-9
    orbit_cap: int = 1000
    vertex_tol: float = 1e-6
    mod_a_warning: float = 0.95
    sweep_workers: int = Field(default=4, ge=1)

    @field_validator("tol", "boundary_tol", "identity_tol", "bisection_width", "positivity_tol")
    @classmethod
    def _positive(cls, value: float) -> float:
        if not value > 0:
            raise ValueError("tolerances must be positive")
        return value


def load_settings(path: str | Path | None = None) -> Settings:
    """Build settings from a YAML file; missing file means built-in defaults."""

    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    if not config_path.exists():
        if path is not None:
            logger.error("Configuration file not found at %s", config_path)
            raise FileNotFoundError(config_path)
        return Settings()

    with open(config_path, encoding="utf-8") as handle:
        raw: dict[str, Any] = yaml.safe_load(handle) or {}

    logger.debug("Loaded settings overrides from %s", config_path)
    return Settings(**raw.get("defaults", raw))


_settings_path: Path | None = None


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return cached library settings."""

    return load_settings(_settings_path)


def use_settings_file(path: str | Path | None) -> Settings:
    """Point get_settings() at another YAML file (None restores the default)."""

    global _settings_path
    _settings_path = Path(path) if path is not None else None
    get_settings.cache_clear()
    return get_settings()


class OutputFormat(str, Enum):
    """Renderers available to the CLI."""

    JSON = "json"
    CSV = "csv"
    SVG = "svg"
    TEXT = "text"


class RunConfig(BaseModel):
    """One CLI invocation: a single eta or a sweep range, plus sampling knobs."""

    eta: float | None = None
    eta_range: tuple[float, float, int] | None = None
    depth: int = 20
    tol: float = 1e-9
    format: OutputFormat = OutputFormat.TEXT
    out: Path | None = None

    @field_validator("eta")
    @classmethod
    def _eta_in_domain(cls, value: float | None) -> float | None:
        if value is not None and not 0.0 < value < math.pi / 3:
            raise ValueError(f"eta must lie in (0, pi/3), got {value!r}")
        return value

    @field_validator("eta_range")
    @classmethod
    def _range_in_domain(
        cls, value: tuple[float, float, int] | None
    ) -> tuple[float, float, int] | None:
        if value is None:
            return value
        start, stop, steps = value
        if steps < 1:
            raise ValueError("eta range needs at least one step")
        for end in (start, stop):
            if not 0.0 < end < math.pi / 3:
                raise ValueError(f"eta range end {end!r} outside (0, pi/3)")
        return value

    @field_validator("depth")
    @classmethod
    def _depth_in_bounds(cls, value: int) -> int:
        settings = get_settings()
        if not settings.min_depth <= value <= settings.max_depth:
            raise ValueError(
                f"depth must be in [{settings.min_depth}, {settings.max_depth}], got {value}"
            )
        return value

    @field_validator("tol")
    @classmethod
    def _tol_positive(cls, value: float) -> float:
        if not value > 0:
            raise ValueError("tol must be positive")
        return value

    @model_validator(mode="after")
    def _svg_needs_single_eta(self) -> RunConfig:
        if self.format is OutputFormat.SVG and self.eta_range is not None:
            raise ValueError("svg output is only available for a single eta")
        return self

    def etas(self) -> list[float]:
        """Expand the configured eta or range into the evaluation order."""

        if self.eta_range is None:
            return [self.eta] if self.eta is not None else []
        start, stop, steps = self.eta_range
        if steps == 1:
            return [start]
        return [start + (stop - start) * i / (steps - 1) for i in range(steps)]

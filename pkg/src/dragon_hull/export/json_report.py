"""
JSON Hull Reports

Documents are checked against the packaged JSON Schema before they leave
the library. Floats go through json's repr formatting and round-trip exactly.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any

import jsonschema
from jsonschema import ValidationError

from ..core.coding import LabeledPoint
from ..errors import DragonHullError
from ..geometry.hull import HullReport
from ..geometry.polygon import Polygon
from ..theory.partition import CellResult, UpperRegion

logger = logging.getLogger(__name__)

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "schemas" / "hull_report.schema.json"


class ReportValidationError(DragonHullError):
    """Raised when an emitted document does not satisfy the hull report schema."""


@lru_cache(maxsize=1)
def load_schema() -> dict[str, Any]:
    with open(SCHEMA_PATH, encoding="utf-8") as f:
        return json.load(f)


@dataclass
class HullDocument:
    """Everything the hull command reports for one eta."""

    eta: float
    cell: CellResult
    vertices: list[LabeledPoint]
    empirical: Polygon
    report: HullReport | None
    depth: int
    error_bound: float
    vertex_tol: float = 1e-6

    @property
    def open_region(self) -> bool:
        return isinstance(self.cell, UpperRegion)

    def empirical_labels(self) -> list[str | None]:
        """Name each empirical vertex after the predicted vertex it sits on, if any."""

        labels: list[str | None] = []
        for z in self.empirical.vertices:
            match = next(
                (lp for lp in self.vertices if abs(lp.value - z) <= self.vertex_tol), None
            )
            labels.append(str(match.label) if match else None)
        return labels

    def to_dict(self) -> dict[str, Any]:
        return {
            'eta': self.eta,
            'cell': self.cell.to_dict(),
            'open_region': self.open_region,
            'depth': self.depth,
            'error_bound': self.error_bound,
            'vertices': labeled_vertices(self.vertices),
            'empirical_vertices': [
                {'label': label, 're': z.real, 'im': z.imag}
                for label, z in zip(self.empirical_labels(), self.empirical.vertices)
            ],
            'report': None if self.report is None else self.report.to_dict(),
        }


def labeled_vertices(points: Iterable[LabeledPoint]) -> list[dict[str, Any]]:
    return [{'label': str(lp.label), 're': lp.value.real, 'im': lp.value.imag} for lp in points]


def validate_document(document: dict[str, Any]) -> None:
    """
    Raises:
        ReportValidationError: document violates the schema
    """
    try:
        jsonschema.validate(instance=document, schema=load_schema())
    except ValidationError as e:
        logger.error("hull report failed schema validation: %s", e.message)
        raise ReportValidationError(f"invalid hull report: {e.message}") from e


def dumps(payload: Any) -> str:
    """Deterministic JSON text (sorted keys, repr floats, trailing newline)."""
    return json.dumps(payload, indent=2, sort_keys=True, allow_nan=False) + "\n"


def render_hull_json(document: HullDocument) -> str:
    payload = document.to_dict()
    validate_document(payload)
    return dumps(payload)

"""
Tabular Exports
pandas frames for vertices, partition roots and sweeps, written as CSV
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from typing import Any

import pandas as pd

from ..core.coding import LabeledPoint
from ..theory.partition import EtaRow

FLOAT_FORMAT = "%.17g"

VERTEX_COLUMNS = ["label", "re", "im"]
ETA_TABLE_COLUMNS = ["k", "eta_k", "pi_over_k", "pi_over_k_minus_1"]
SWEEP_COLUMNS = ["eta", "cell", "k", "predicted_count", "empirical_count", "match", "error"]


def vertices_frame(points: Iterable[LabeledPoint]) -> pd.DataFrame:
    rows = [
        {'label': str(lp.label), 're': lp.value.real, 'im': lp.value.imag} for lp in points
    ]
    return pd.DataFrame(rows, columns=VERTEX_COLUMNS)


def eta_table_frame(rows: Sequence[EtaRow]) -> pd.DataFrame:
    return pd.DataFrame([row.to_dict() for row in rows], columns=ETA_TABLE_COLUMNS)


def records_frame(
    records: Sequence[Mapping[str, Any]], columns: list[str] | None = None
) -> pd.DataFrame:
    """Flat records (sweep rows, params) in a fixed column order."""

    frame = pd.DataFrame([dict(r) for r in records])
    if columns is not None:
        frame = frame.reindex(columns=columns)
    return frame


def to_csv(frame: pd.DataFrame) -> str:
    """
    Serialize with 17 significant digits so floats survive a round trip.

    Line endings are always \\n, whatever the platform.
    """
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")

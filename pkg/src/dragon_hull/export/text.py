"""
Text Rendering
Human-readable output for the terminal
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Any

import pandas as pd

from ..verification.base_suite import SuiteResult
from .json_report import HullDocument

UPPER_REGION_WARNING = "UpperRegion: Theorem 2 not applicable"


def format_value(value: Any) -> str:
    """repr precision for floats, re/im pairs for complex values."""

    if isinstance(value, complex):
        return f"{value.real!r} {'+' if value.imag >= 0 else '-'} {abs(value.imag)!r}i"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, Mapping) and set(value) == {'re', 'im'}:
        return format_value(complex(value['re'], value['im']))
    return str(value)


def format_key_values(record: Mapping[str, Any], warnings: list[str] | None = None) -> str:
    width = max((len(key) for key in record), default=0)
    lines = [f"{key.ljust(width)}  {format_value(value)}" for key, value in record.items()]
    lines.extend(f"WARNING: {message}" for message in warnings or [])
    return "\n".join(lines) + "\n"


def format_table(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(no rows)\n"
    return frame.to_string(index=False, float_format=lambda v: f"{v:.15g}") + "\n"


def format_hull(document: HullDocument) -> str:
    lines = [f"eta = {document.eta!r}"]
    cell = document.cell.to_dict()
    if document.open_region:
        lines.append(f"cell: upper region; {UPPER_REGION_WARNING}")
    else:
        lines.append(f"cell: {cell}")

    if document.vertices:
        lines.append(f"predicted hull ({len(document.vertices)} vertices, clockwise):")
        lines.extend(
            f"  {str(lp.label):>4}  {format_value(lp.value)}" for lp in document.vertices
        )

    labels = document.empirical_labels()
    lines.append(
        f"empirical hull ({len(document.empirical)} vertices, depth {document.depth}, "
        f"error bound {document.error_bound:.3g}):"
    )
    lines.extend(
        f"  {label or '-':>4}  {format_value(z)}"
        for label, z in zip(labels, document.empirical.vertices)
    )

    report = document.report
    if report is not None:
        lines.append(
            f"match: {'PASS' if report.passed else 'FAIL'}  "
            f"max |predicted - empirical| = {report.max_predicted_to_empirical:.3g}  "
            f"max empirical offset = {report.max_empirical_to_predicted:.3g}  "
            f"max sample excess = {report.metadata.get('max_sample_excess', 0.0):.3g}"
        )
    return "\n".join(lines) + "\n"


def _scalar(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def summarize_value(value: Any) -> list[str]:
    """
    Short lines for a suite value: its scalar fields on one line, nested
    records (up to three) on their own lines, longer lists as counts.
    """
    if value is None:
        return []
    if not isinstance(value, Mapping):
        return [_scalar(value)]

    scalars = [
        f"{key}={_scalar(item)}"
        for key, item in value.items()
        if item is None or isinstance(item, (bool, int, float, str))
    ]
    lines = [" ".join(scalars)] if scalars else []
    for key, item in value.items():
        if isinstance(item, Mapping):
            lines.extend(f"{key}: {line}" for line in summarize_value(item)[:1])
        elif isinstance(item, list):
            if item and len(item) <= 3 and all(isinstance(entry, Mapping) for entry in item):
                for entry in item:
                    lines.extend(f"{key}: {line}" for line in summarize_value(entry)[:1])
            else:
                lines.append(f"{key}: {len(item)}")
    return lines


def format_suite_results(results: Mapping[str, SuiteResult]) -> str:
    lines = []
    for name, result in results.items():
        if result.advisory:
            status = "ADVISORY"
        else:
            status = "PASS" if result.passed else "FAIL"
        line = f"{status:<8} {name:<16} {result.latency_ms:9.1f} ms"
        if result.error:
            line += f"  error: {result.error}"
        lines.append(line)
        lines.extend(f"         {detail}" for detail in summarize_value(result.value))
    failed = sum(r.blocking_failure for r in results.values())
    lines.append(f"{len(results)} suites, {failed} failed")
    return "\n".join(lines) + "\n"

"""
Export
JSON, CSV, SVG and text renderers for hull reports and tables
"""

from .json_report import (
    HullDocument,
    ReportValidationError,
    dumps,
    labeled_vertices,
    load_schema,
    render_hull_json,
    validate_document,
)
from .svg import SVG, render_hull_svg
from .tables import eta_table_frame, records_frame, to_csv, vertices_frame
from .text import (
    UPPER_REGION_WARNING,
    format_hull,
    format_key_values,
    format_suite_results,
    format_table,
    format_value,
)

__all__ = [
    'HullDocument',
    'ReportValidationError',
    'SVG',
    'UPPER_REGION_WARNING',
    'dumps',
    'eta_table_frame',
    'format_hull',
    'format_key_values',
    'format_suite_results',
    'format_table',
    'format_value',
    'labeled_vertices',
    'load_schema',
    'records_frame',
    'render_hull_json',
    'render_hull_svg',
    'to_csv',
    'validate_document',
    'vertices_frame',
]

"""
CLI Commands

Each command takes a validated RunConfig plus its own options and returns the
rendered output together with the process exit code.
"""

from __future__ import annotations

import asyncio
import json
import logging
import math
from dataclasses import dataclass
from typing import Any

import pandas as pd

from ..codings.extreme import SimilitudeIFS, dragon_ifs, extreme_necessary_check
from ..config import OutputFormat, RunConfig, get_settings
from ..core.coding import Coding
from ..core.params import DragonParams, make_params
from ..core.points import point_b, point_w, point_z
from ..errors import DomainError, DragonHullError
from ..export import (
    UPPER_REGION_WARNING,
    HullDocument,
    dumps,
    eta_table_frame,
    format_hull,
    format_key_values,
    format_suite_results,
    format_table,
    records_frame,
    render_hull_json,
    render_hull_svg,
    to_csv,
    vertices_frame,
)
from ..export.tables import SWEEP_COLUMNS
from ..oracle.sampler import (
    SampleCloud,
    compare_with_prediction,
    empirical_hull,
    sample_attractor,
)
from ..theory.hull import predicted_hull
from ..theory.partition import (
    BoundaryAmbiguous,
    CellResult,
    PartitionCell,
    UpperRegion,
    eta_table,
    partition_cell,
)
from ..verification import get_registry

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass
class CommandOutput:
    text: str
    exit_code: int = EXIT_OK


def _unsupported(command: str, fmt: OutputFormat) -> DomainError:
    return DomainError(f"{command} does not support --format {fmt.value}")


def _single_eta(config: RunConfig, command: str) -> float:
    etas = config.etas()
    if len(etas) != 1:
        raise DomainError(f"{command} needs exactly one eta (use --eta)")
    return etas[0]


def cell_label(cell: CellResult) -> str:
    if isinstance(cell, PartitionCell):
        return f"k={cell.k}"
    if isinstance(cell, BoundaryAmbiguous):
        return f"boundary_k={cell.k}"
    return "upper_region"


# =============================================================================
# params
# =============================================================================


def params_record(p: DragonParams) -> dict[str, Any]:
    cell = partition_cell(p.eta)
    return {
        'eta': p.eta,
        'eta_degrees': math.degrees(p.eta),
        'a': p.a,
        'mod_a': p.mod_a,
        'c': p.c,
        'z0': point_z(p, 0),
        'w1': point_w(p, 1),
        'b0': point_b(p, 0),
        'w0': point_w(p, 0),
        'cell': cell_label(cell),
    }


def params_warnings(p: DragonParams) -> list[str]:
    warnings = []
    if isinstance(partition_cell(p.eta), UpperRegion):
        warnings.append(UPPER_REGION_WARNING)
    limit = get_settings().mod_a_warning
    if p.mod_a > limit:
        warnings.append(f"|a| = {p.mod_a:.6f} > {limit}: slow convergence")
    return warnings


def _jsonable(value: Any) -> Any:
    if isinstance(value, complex):
        return {'re': value.real, 'im': value.imag}
    return value


def cmd_params(config: RunConfig) -> CommandOutput:
    p = make_params(_single_eta(config, "params"))
    record = params_record(p)
    warnings = params_warnings(p)

    if config.format is OutputFormat.TEXT:
        return CommandOutput(format_key_values(record, warnings))
    if config.format is OutputFormat.JSON:
        payload = {key: _jsonable(value) for key, value in record.items()}
        payload['cell'] = partition_cell(p.eta).to_dict()
        payload['warnings'] = warnings
        return CommandOutput(dumps(payload))
    if config.format is OutputFormat.CSV:
        flat: dict[str, Any] = {}
        for key, value in record.items():
            if isinstance(value, complex):
                flat[f"{key}_re"], flat[f"{key}_im"] = value.real, value.imag
            else:
                flat[key] = value
        return CommandOutput(to_csv(pd.DataFrame([flat])))
    raise _unsupported("params", config.format)


# =============================================================================
# eta-table
# =============================================================================


def cmd_eta_table(
    config: RunConfig, k_max: int, root_tol: float | None = None
) -> CommandOutput:
    """
    Partition roots for k = 4..k_max; root_tol is the bisection width.

    Raises:
        DomainError: k_max < 4 or root_tol <= 0
    """
    rows = eta_table(k_max, root_tol)
    frame = eta_table_frame(rows)
    if config.format is OutputFormat.TEXT:
        return CommandOutput(format_table(frame))
    if config.format is OutputFormat.CSV:
        return CommandOutput(to_csv(frame))
    if config.format is OutputFormat.JSON:
        return CommandOutput(dumps([row.to_dict() for row in rows]))
    raise _unsupported("eta-table", config.format)


# =============================================================================
# hull
# =============================================================================


def build_hull_document(
    p: DragonParams, depth: int, tol: float
) -> tuple[HullDocument, SampleCloud]:
    """Predicted and empirical hulls for one eta; returns the document and the cloud."""

    cell = partition_cell(p.eta)
    cloud = sample_attractor(p, depth)

    if isinstance(cell, UpperRegion):
        logger.warning("eta=%.17g is above eta_4: reporting the empirical hull only", p.eta)
        document = HullDocument(
            eta=p.eta,
            cell=cell,
            vertices=[],
            empirical=empirical_hull(p, cloud=cloud),
            report=None,
            depth=cloud.depth,
            error_bound=cloud.error_bound,
            vertex_tol=get_settings().vertex_tol,
        )
        return document, cloud

    predicted = predicted_hull(p)
    empirical = empirical_hull(p, cloud=cloud)
    report = compare_with_prediction(p, tol=tol, cloud=cloud, empirical=empirical)
    document = HullDocument(
        eta=p.eta,
        cell=cell,
        vertices=list(predicted.vertices),
        empirical=empirical,
        report=report,
        depth=cloud.depth,
        error_bound=cloud.error_bound,
        vertex_tol=get_settings().vertex_tol,
    )
    return document, cloud


def cmd_hull(config: RunConfig) -> CommandOutput:
    p = make_params(_single_eta(config, "hull"))
    document, cloud = build_hull_document(p, config.depth, config.tol)
    failed = document.report is not None and not document.report.passed
    exit_code = EXIT_CHECK_FAILED if failed else EXIT_OK

    if config.format is OutputFormat.JSON:
        return CommandOutput(render_hull_json(document), exit_code)
    if config.format is OutputFormat.TEXT:
        return CommandOutput(format_hull(document), exit_code)
    if config.format is OutputFormat.CSV:
        predicted = vertices_frame(document.vertices).assign(source="predicted")
        empirical = pd.DataFrame(
            document.to_dict()['empirical_vertices'], columns=["label", "re", "im"]
        ).assign(source="empirical")
        frame = pd.concat([predicted, empirical], ignore_index=True)
        return CommandOutput(to_csv(frame[["source", "label", "re", "im"]]), exit_code)

    predicted_polygon = None if document.open_region else predicted_hull(p).polygon
    title = f"eta = {p.eta:.12g}  cell {cell_label(document.cell)}  depth {document.depth}"
    svg = render_hull_svg(cloud.points, document.vertices, predicted_polygon, title)
    return CommandOutput(svg, exit_code)


# =============================================================================
# verify
# =============================================================================


def cmd_verify(
    config: RunConfig,
    suites: list[str] | None = None,
    cells: list[int] | None = None,
    list_only: bool = False,
) -> CommandOutput:
    """
    Run verification suites.

    Raises:
        DomainError: unknown suite name or unsupported format
    """
    registry = get_registry()
    if list_only:
        return CommandOutput(dumps(registry.catalog()))

    kwargs: dict[str, Any] = {}
    if config.etas():
        kwargs['etas'] = config.etas()
    if cells:
        kwargs['cells'] = cells
    if config.depth != get_settings().depth:
        kwargs['depth'] = config.depth

    try:
        results = registry.run(suites, **kwargs)
    except KeyError as e:
        raise DomainError(str(e.args[0])) from e

    failed = any(r.blocking_failure for r in results.values())
    exit_code = EXIT_CHECK_FAILED if failed else EXIT_OK
    if config.format is OutputFormat.TEXT:
        return CommandOutput(format_suite_results(results), exit_code)
    if config.format is OutputFormat.JSON:
        payload = {name: result.to_dict() for name, result in results.items()}
        return CommandOutput(json.dumps(payload, indent=2, default=str) + "\n", exit_code)
    raise _unsupported("verify", config.format)


# =============================================================================
# coding-check
# =============================================================================


def cmd_coding_check(
    config: RunConfig,
    prefix: str,
    period: str,
    maps: list[tuple[complex, complex]] | None = None,
) -> CommandOutput:
    """
    Positivity test for the period of prefix · period^inf.

    Uses the dragon IFS at --eta unless explicit maps are given.

    Raises:
        DomainError: empty period, no eta for the dragon, or a non-contracting map
        InvalidSymbolError: a symbol has no matching map
    """
    if maps:
        ifs = SimilitudeIFS(maps=tuple(maps))
        source: dict[str, Any] = {
            'ifs': [{'a': _jsonable(a), 'b': _jsonable(b)} for a, b in ifs.maps]
        }
    else:
        eta = _single_eta(config, "coding-check --dragon")
        ifs = dragon_ifs(make_params(eta))
        source = {'ifs': 'dragon', 'eta': eta}

    coding = Coding.from_strings(prefix, period).validate(ifs.size)
    verdict = extreme_necessary_check(ifs, coding, config.tol if maps else None)
    exit_code = EXIT_OK if verdict.passes else EXIT_CHECK_FAILED

    payload = {'coding': str(coding), **source, **verdict.to_dict()}
    if config.format is OutputFormat.JSON:
        return CommandOutput(dumps(payload), exit_code)
    if config.format is OutputFormat.TEXT:
        record = {key: value for key, value in payload.items() if key != 'ifs'}
        return CommandOutput(format_key_values(record), exit_code)
    raise _unsupported("coding-check", config.format)


# =============================================================================
# sweep
# =============================================================================


def sweep_row(eta: float, depth: int, tol: float) -> dict[str, Any]:
    """Cell, vertex counts and match flag for one eta; errors land in the row."""

    row: dict[str, Any] = dict.fromkeys(SWEEP_COLUMNS)
    row['eta'] = eta
    try:
        p = make_params(eta)
        cell = partition_cell(eta)
        row['cell'] = cell_label(cell)
        if isinstance(cell, UpperRegion):
            row['empirical_count'] = len(empirical_hull(p, depth))
            return row
        report = compare_with_prediction(p, depth, tol)
        row['k'] = report.metadata['k']
        row['predicted_count'] = report.predicted_count
        row['empirical_count'] = report.empirical_count
        row['match'] = report.passed
    except DragonHullError as e:
        logger.warning("sweep at eta=%.17g failed: %s", eta, e)
        row['error'] = f"{type(e).__name__}: {e}"
    return row


async def run_sweep(etas: list[float], depth: int, tol: float) -> list[dict[str, Any]]:
    """Evaluate etas concurrently in worker threads; rows come back in eta order."""

    limit = asyncio.Semaphore(get_settings().sweep_workers)

    async def one(eta: float) -> dict[str, Any]:
        async with limit:
            return await asyncio.to_thread(sweep_row, eta, depth, tol)

    return list(await asyncio.gather(*(one(eta) for eta in etas)))


def cmd_sweep(config: RunConfig) -> CommandOutput:
    etas = config.etas()
    if not etas:
        raise DomainError("sweep needs --eta-range A:B:N or --eta")

    rows = asyncio.run(run_sweep(etas, config.depth, config.tol))
    failed = any(row['match'] is False or row['error'] for row in rows)
    exit_code = EXIT_CHECK_FAILED if failed else EXIT_OK

    frame = records_frame(rows, SWEEP_COLUMNS)
    if config.format is OutputFormat.CSV:
        return CommandOutput(to_csv(frame), exit_code)
    if config.format is OutputFormat.JSON:
        return CommandOutput(dumps(rows), exit_code)
    if config.format is OutputFormat.TEXT:
        return CommandOutput(format_table(frame), exit_code)
    raise _unsupported("sweep", config.format)


__all__ = [
    'EXIT_CHECK_FAILED',
    'EXIT_OK',
    'EXIT_USAGE',
    'CommandOutput',
    'build_hull_document',
    'cell_label',
    'cmd_coding_check',
    'cmd_eta_table',
    'cmd_hull',
    'cmd_params',
    'cmd_sweep',
    'cmd_verify',
    'params_record',
    'params_warnings',
    'run_sweep',
    'sweep_row',
]

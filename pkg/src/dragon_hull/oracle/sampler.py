"""
Attractor Sampler

Deterministic ground truth for the closed-form hull: all images f_w({0, 1})
over words of a fixed length, their hull, and a vertex-wise comparison with
the predicted polygon.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import numpy as np

from ..config import get_settings
from ..core.params import DragonParams
from ..core.points import candidate_set
from ..errors import DomainError
from ..geometry.hull import HullReport, convex_hull, hull_match
from ..geometry.polygon import Polygon, max_outward_excess
from ..theory.hull import predicted_hull
from ..theory.partition import PartitionCell, partition_cell

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampleCloud:
    """
    2^(depth+1) points of K_eta.

    Attributes:
        points: complex128 array
        depth: Word length
        error_bound: |a|^depth / (1 - |a|), a Hausdorff bound between cloud and K_eta
    """

    points: np.ndarray
    depth: int
    error_bound: float

    def __len__(self) -> int:
        return int(self.points.size)


def _check_depth(depth: int) -> None:
    settings = get_settings()
    if not settings.min_depth <= depth <= settings.max_depth:
        raise DomainError(
            f"depth must be in [{settings.min_depth}, {settings.max_depth}], got {depth}"
        )


def sample_attractor(p: DragonParams, depth: int | None = None) -> SampleCloud:
    """
    Expand {0, 1} level by level: S -> a S  +  (1 - conj(a) S).

    Raises:
        DomainError: depth outside the configured bounds
    """
    settings = get_settings()
    depth = settings.depth if depth is None else depth
    _check_depth(depth)

    if p.mod_a > settings.mod_a_warning:
        logger.warning(
            "|a| = %.6f at eta=%.6f: sampling converges slowly", p.mod_a, p.eta
        )

    start = time.time()
    points = np.array([0.0, 1.0], dtype=np.complex128)
    for _ in range(depth):
        points = np.concatenate((p.a * points, 1.0 - p.a_conj * points))

    logger.debug(
        "sampled %d points at depth %d in %.1f ms",
        points.size,
        depth,
        (time.time() - start) * 1000,
    )
    return SampleCloud(
        points=points,
        depth=depth,
        error_bound=p.mod_a**depth / (1.0 - p.mod_a),
    )


def candidate_depth(p: DragonParams) -> int:
    """2 k_cell + 5, with k_cell = 4 when eta is not inside a cell."""

    cell = partition_cell(p.eta)
    k_cell = cell.k if isinstance(cell, PartitionCell) else 4
    return 2 * k_cell + 5


def empirical_hull(
    p: DragonParams, depth: int | None = None, cloud: SampleCloud | None = None
) -> Polygon:
    """Hull of the sample cloud together with the exact candidate points."""

    cloud = sample_attractor(p, depth) if cloud is None else cloud
    extra = np.array([lp.value for lp in candidate_set(p, candidate_depth(p))])
    return convex_hull(np.concatenate((cloud.points, extra)))


def compare_with_prediction(
    p: DragonParams,
    depth: int | None = None,
    tol: float | None = None,
    cloud: SampleCloud | None = None,
    empirical: Polygon | None = None,
) -> HullReport:
    """
    Match the predicted hull against the empirical one and measure how far
    any sample escapes the predicted polygon.

    Raises:
        OpenRegionError: eta in (eta_4, pi/3)
        BoundaryAmbiguousError: eta at a partition root other than eta_4
    """
    settings = get_settings()
    tol = settings.tol if tol is None else tol

    predicted = predicted_hull(p)
    cloud = sample_attractor(p, depth) if cloud is None else cloud
    if empirical is None:
        empirical = empirical_hull(p, cloud=cloud)

    report = hull_match(predicted.polygon, empirical, settings.vertex_tol)
    excess = max_outward_excess(predicted.polygon, cloud.points)
    report.metadata.update(
        {
            'eta': p.eta,
            'k': predicted.k,
            'depth': cloud.depth,
            'samples': len(cloud),
            'error_bound': cloud.error_bound,
            'max_sample_excess': excess,
            'excess_tol': tol,
        }
    )
    report.passed = report.passed and excess <= tol
    return report

"""
Convex Hull
Monotone-chain hull of complex point sets and predicted/empirical comparison
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..errors import DegenerateGeometryError
from .polygon import Orientation, Polygon

logger = logging.getLogger(__name__)

# Relative collinearity threshold: triples with |cross| <= EPS * diam^2 are dropped
COLLINEAR_EPS = 1e-12

# Interior discard only pays off on large clouds
PREFILTER_MIN_POINTS = 64

_OCTANTS = np.exp(1j * np.pi / 4 * np.arange(8))


def _as_points(points: Iterable[complex] | np.ndarray) -> np.ndarray:
    pts = np.asarray(
        points if isinstance(points, np.ndarray) else list(points), dtype=np.complex128
    ).ravel()
    if not np.all(np.isfinite(pts)):
        raise DegenerateGeometryError("hull input contains non-finite points")
    return pts


def _discard_interior(pts: np.ndarray, scale: float) -> np.ndarray:
    """
    Drop points strictly inside the polygon of the eight octant-extreme points.

    Those points cannot be hull vertices; anything within scale * 1e-9 of the
    filter polygon is kept.
    """
    # octant directions are visited counterclockwise; drop repeats keeping order
    ordered: list[complex] = []
    for direction in _OCTANTS:
        z = complex(pts[np.argmax(pts.real * direction.real + pts.imag * direction.imag)])
        if not ordered or (z != ordered[-1] and z != ordered[0]):
            ordered.append(z)
    if len(ordered) < 3:
        return pts

    margin = 1e-9 * scale
    inside = np.ones(pts.shape, dtype=bool)
    for i, start in enumerate(ordered):
        edge = ordered[(i + 1) % len(ordered)] - start
        rel = pts - start
        offset = (edge.real * rel.imag - edge.imag * rel.real) / abs(edge)
        inside &= offset > margin
    kept = pts[~inside]
    logger.debug("hull prefilter kept %d of %d points", kept.size, pts.size)
    return kept


def convex_hull(points: Iterable[complex] | np.ndarray) -> Polygon:
    """
    Convex hull in clockwise order, starting at the lowest (re, im) vertex.

    Collinear boundary points are excluded. The result depends only on the
    point set, not on input order.

    Raises:
        DegenerateGeometryError: fewer than 3 distinct points, or all collinear
    """
    pts = _as_points(points)
    if pts.size < 3:
        raise DegenerateGeometryError(f"hull needs 3 points, got {pts.size}")

    span = complex(np.ptp(pts.real), np.ptp(pts.imag))
    # bounding-box diagonal, within a factor sqrt(2) of the diameter
    scale = abs(span)
    if scale == 0.0:
        raise DegenerateGeometryError("all hull points coincide")

    if pts.size > PREFILTER_MIN_POINTS:
        pts = _discard_interior(pts, scale)

    order = np.lexsort((pts.imag, pts.real))
    xs, ys = pts.real[order], pts.imag[order]
    keep = np.ones(xs.shape, dtype=bool)
    keep[1:] = (np.diff(xs) != 0) | (np.diff(ys) != 0)
    coords = list(zip(xs[keep].tolist(), ys[keep].tolist()))
    if len(coords) < 3:
        raise DegenerateGeometryError("hull needs 3 distinct points")

    eps = COLLINEAR_EPS * scale * scale

    def turn(o: tuple[float, float], p: tuple[float, float], q: tuple[float, float]) -> float:
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])

    lower: list[tuple[float, float]] = []
    for point in coords:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], point) <= eps:
            lower.pop()
        lower.append(point)

    upper: list[tuple[float, float]] = []
    for point in reversed(coords):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], point) <= eps:
            upper.pop()
        upper.append(point)

    ccw = lower[:-1] + upper[:-1]
    if len(ccw) < 3:
        raise DegenerateGeometryError("hull points are collinear")

    # counterclockwise from the lowest vertex; reverse the tail for clockwise
    clockwise = [ccw[0]] + ccw[:0:-1]
    return Polygon(tuple(complex(x, y) for x, y in clockwise), Orientation.CLOCKWISE)


def same_cycle(first: Polygon, second: Polygon, tol: float) -> bool:
    """Vertex cycles agree up to rotation of the starting index."""

    if len(first) != len(second) or first.orientation is not second.orientation:
        return False
    count = len(first)
    for shift in range(count):
        if all(
            abs(first.vertices[i] - second.vertices[(i + shift) % count]) <= tol
            for i in range(count)
        ):
            return True
    return False


@dataclass
class HullReport:
    """Distance comparison between a predicted and an empirical hull."""

    predicted_count: int
    empirical_count: int
    max_predicted_to_empirical: float
    max_empirical_to_predicted: float
    vertex_tol: float
    passed: bool
    same_cycle: bool = False
    unmatched_predicted: list[int] = field(default_factory=list)
    unmatched_empirical: list[int] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def counts_agree(self) -> bool:
        return self.predicted_count == self.empirical_count

    def to_dict(self) -> dict[str, Any]:
        return {
            'predicted_count': self.predicted_count,
            'empirical_count': self.empirical_count,
            'counts_agree': self.counts_agree,
            'max_predicted_to_empirical': self.max_predicted_to_empirical,
            'max_empirical_to_predicted': self.max_empirical_to_predicted,
            'vertex_tol': self.vertex_tol,
            'passed': self.passed,
            'same_cycle': self.same_cycle,
            'unmatched_predicted': list(self.unmatched_predicted),
            'unmatched_empirical': list(self.unmatched_empirical),
            'metadata': dict(self.metadata),
        }


def hull_match(predicted: Polygon, empirical: Polygon, vertex_tol: float) -> HullReport:
    """
    Compare two hulls vertex-wise.

    Each predicted vertex must lie within vertex_tol of some empirical vertex,
    and each empirical vertex within vertex_tol of the predicted polygon's
    boundary. Empirical hulls resolve near-collinear corners differently, so
    vertex counts and the cycle comparison are reported but do not decide the
    outcome.
    """
    to_empirical = []
    unmatched_predicted = []
    for index, vertex in enumerate(predicted.vertices):
        nearest = min(abs(vertex - other) for other in empirical.vertices)
        to_empirical.append(nearest)
        if nearest > vertex_tol:
            unmatched_predicted.append(index)

    to_predicted = []
    unmatched_empirical = []
    for index, vertex in enumerate(empirical.vertices):
        nearest = predicted.boundary_distance(vertex)
        to_predicted.append(nearest)
        if nearest > vertex_tol:
            unmatched_empirical.append(index)

    report = HullReport(
        predicted_count=len(predicted),
        empirical_count=len(empirical),
        max_predicted_to_empirical=max(to_empirical),
        max_empirical_to_predicted=max(to_predicted),
        vertex_tol=vertex_tol,
        passed=not unmatched_predicted and not unmatched_empirical,
        same_cycle=same_cycle(predicted, empirical, vertex_tol),
        unmatched_predicted=unmatched_predicted,
        unmatched_empirical=unmatched_empirical,
    )
    if not report.counts_agree:
        logger.info(
            "hull vertex counts differ: predicted=%d empirical=%d",
            report.predicted_count,
            report.empirical_count,
        )
    return report

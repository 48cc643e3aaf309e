"""Convex polygons and containment tests."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..config import get_settings
from ..core.params import ensure_finite
from ..errors import DegenerateGeometryError
from .primitives import cross, distance_to_segment, orient_im


class Orientation(str, Enum):
    CLOCKWISE = "clockwise"
    COUNTERCLOCKWISE = "counterclockwise"


class RegionStatus(str, Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def signed_area(vertices: Sequence[complex]) -> float:
    """Shoelace area; negative for clockwise cycles (imaginary axis up)."""
    total = 0.0
    count = len(vertices)
    for i in range(count):
        total += cross(vertices[i], vertices[(i + 1) % count])
    return 0.5 * total


@dataclass(frozen=True)
class Polygon:
    """
    Ordered vertex cycle.

    Attributes:
        vertices: At least 3 points, no two consecutive ones within 1e-12
        orientation: Matches the sign of the signed area
    """

    vertices: tuple[complex, ...]
    orientation: Orientation

    def __post_init__(self) -> None:
        vertices = tuple(ensure_finite(v, "vertex") for v in self.vertices)
        if len(vertices) < 3:
            raise DegenerateGeometryError(f"a polygon needs 3 vertices, got {len(vertices)}")
        tol = get_settings().identity_tol
        for i, vertex in enumerate(vertices):
            if abs(vertex - vertices[(i + 1) % len(vertices)]) <= tol:
                raise DegenerateGeometryError(f"consecutive vertices {i} coincide")
        area = signed_area(vertices)
        if area == 0.0:
            raise DegenerateGeometryError("polygon has zero area")
        expected = Orientation.CLOCKWISE if area < 0 else Orientation.COUNTERCLOCKWISE
        if expected is not self.orientation:
            raise DegenerateGeometryError(
                f"orientation flag {self.orientation.value} contradicts signed area {area}"
            )
        object.__setattr__(self, 'vertices', vertices)

    @classmethod
    def from_vertices(cls, vertices: Iterable[complex]) -> Polygon:
        """Build a polygon, deriving the orientation from the signed area."""
        vertices = tuple(complex(v) for v in vertices)
        if len(vertices) >= 3 and signed_area(vertices) < 0:
            return cls(vertices, Orientation.CLOCKWISE)
        return cls(vertices, Orientation.COUNTERCLOCKWISE)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def area(self) -> float:
        return signed_area(self.vertices)

    def edges(self) -> list[tuple[complex, complex]]:
        count = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % count]) for i in range(count)]

    def is_convex(self) -> bool:
        """Every turn has the orientation's sign and the boundary winds once."""
        return is_convex_oriented(self.vertices, self.orientation)

    def boundary_distance(self, p: complex) -> float:
        return min(distance_to_segment(p, start, end) for start, end in self.edges())


def is_convex_oriented(vertices: Sequence[complex], orientation: Orientation) -> bool:
    """
    For clockwise cycles orient_im(p, q, r) > 0 at every consecutive triple
    (the turn at q is to the right); counterclockwise cycles have it < 0.
    """
    count = len(vertices)
    if count < 3:
        return False
    sign = 1.0 if orientation is Orientation.CLOCKWISE else -1.0
    turning = 0.0
    for i in range(count):
        p, q, r = vertices[i - 1], vertices[i], vertices[(i + 1) % count]
        if sign * orient_im(p, q, r) <= 0:
            return False
        turning += np.angle((r - q) / (q - p))
    # simple, once-around cycles turn by exactly 2*pi in total
    return bool(abs(abs(turning) - 2 * np.pi) < 1e-6)


def is_convex_clockwise(vertices: Sequence[complex]) -> bool:
    return is_convex_oriented(vertices, Orientation.CLOCKWISE)


def _outward_offsets(p: complex, poly: Polygon) -> list[float]:
    """Signed distances of p beyond each edge's supporting line (positive = outside)."""
    sign = 1.0 if poly.orientation is Orientation.CLOCKWISE else -1.0
    offsets = []
    for start, end in poly.edges():
        edge = end - start
        offsets.append(sign * cross(edge, p - start) / abs(edge))
    return offsets


def in_convex_polygon(p: complex, poly: Polygon, tol: float) -> RegionStatus:
    """Half-plane test on every edge; within tol of an edge line counts as boundary."""

    p = ensure_finite(p, "p")
    worst = max(_outward_offsets(p, poly))
    if worst > tol:
        return RegionStatus.OUTSIDE
    if worst < -tol:
        return RegionStatus.INSIDE
    return RegionStatus.BOUNDARY


def in_triangle(p: complex, u: complex, v: complex, w: complex, tol: float) -> bool:
    """
    Closed solid triangle membership with tolerance.

    Raises:
        DegenerateGeometryError: u, v, w are collinear
    """
    if abs(orient_im(u, v, w)) <= get_settings().identity_tol * max(
        abs(u - v), abs(w - v), 1.0
    ) ** 2:
        raise DegenerateGeometryError("triangle vertices are collinear")
    triangle = Polygon.from_vertices((u, v, w))
    return in_convex_polygon(p, triangle, tol) is not RegionStatus.OUTSIDE


def max_outward_excess(poly: Polygon, points: np.ndarray) -> float:
    """Largest half-plane violation over a point array (0 when all inside)."""

    pts = np.asarray(points, dtype=np.complex128).ravel()
    if pts.size == 0:
        return 0.0
    sign = 1.0 if poly.orientation is Orientation.CLOCKWISE else -1.0
    worst = np.full(pts.shape, -np.inf)
    for start, end in poly.edges():
        edge = end - start
        rel = pts - start
        offset = sign * (edge.real * rel.imag - edge.imag * rel.real) / abs(edge)
        np.maximum(worst, offset, out=worst)
    return float(max(0.0, worst.max()))

"""
Tests for orientation primitives, convex polygons and hulls
"""

import math

import numpy as np
import pytest

from dragon_hull.errors import DegenerateGeometryError
from dragon_hull.geometry import (
    Orientation,
    Polygon,
    RegionStatus,
    angle_uvw,
    convex_hull,
    distance_to_segment,
    hull_match,
    in_convex_polygon,
    in_triangle,
    max_outward_excess,
    orient_im,
    signed_area,
)

UNIT_SQUARE_CW = (0j, 1j, 1 + 1j, 1 + 0j)


@pytest.fixture
def square():
    return Polygon(UNIT_SQUARE_CW, Orientation.CLOCKWISE)


@pytest.mark.unit
class TestPrimitives:
    def test_orientation_matches_angle(self):
        assert orient_im(1 + 0j, 0j, 1j) > 0
        assert angle_uvw(1 + 0j, 0j, 1j) == pytest.approx(math.pi / 2)
        assert orient_im(1j, 0j, 1 + 0j) < 0
        assert angle_uvw(1j, 0j, 1 + 0j) == pytest.approx(3 * math.pi / 2)

    def test_angle_rejects_coincident_points(self):
        with pytest.raises(DegenerateGeometryError):
            angle_uvw(0j, 0j, 1 + 0j)

    def test_distance_to_segment(self):
        assert distance_to_segment(1j, 0j, 1 + 0j) == pytest.approx(1.0)
        assert distance_to_segment(2 + 0j, 0j, 1 + 0j) == pytest.approx(1.0)
        assert distance_to_segment(0.5j, 0j, 0j) == pytest.approx(0.5)

    def test_random_triples(self):
        rng = np.random.default_rng(17)
        triples = rng.normal(size=(200, 3)) + 1j * rng.normal(size=(200, 3))
        for u, v, w in triples.tolist():
            if abs(orient_im(u, v, w)) < 1e-9:
                continue
            assert orient_im(w, v, u) == pytest.approx(-orient_im(u, v, w), abs=1e-12)
            assert angle_uvw(u, v, w) + angle_uvw(w, v, u) == pytest.approx(2 * math.pi)
            assert (orient_im(u, v, w) > 0) == (0 < angle_uvw(u, v, w) < math.pi)


@pytest.mark.unit
class TestPolygon:
    def test_clockwise_square(self, square):
        assert square.area == pytest.approx(-1.0)
        assert signed_area(UNIT_SQUARE_CW) < 0
        assert square.is_convex()

    def test_orientation_flag_must_match_area(self):
        with pytest.raises(DegenerateGeometryError):
            Polygon((0j, 1 + 0j, 1j), Orientation.CLOCKWISE)

    def test_too_few_vertices(self):
        with pytest.raises(DegenerateGeometryError):
            Polygon((0j, 1 + 0j), Orientation.CLOCKWISE)

    def test_coincident_consecutive_vertices(self):
        with pytest.raises(DegenerateGeometryError):
            Polygon.from_vertices((0j, 0j, 1 + 0j, 1j))

    def test_from_vertices_derives_orientation(self):
        ccw = Polygon.from_vertices(reversed(UNIT_SQUARE_CW))
        assert ccw.orientation is Orientation.COUNTERCLOCKWISE
        assert ccw.area == pytest.approx(1.0)

    def test_reflex_corner_is_not_convex(self):
        dart = Polygon.from_vertices((0j, 2j, 0.5 + 0.5j, 2 + 0j))
        assert dart.orientation is Orientation.CLOCKWISE
        assert not dart.is_convex()

    def test_containment_statuses(self, square):
        assert in_convex_polygon(0.5 + 0.5j, square, 1e-9) is RegionStatus.INSIDE
        assert in_convex_polygon(0.5 + 0j, square, 1e-9) is RegionStatus.BOUNDARY
        assert in_convex_polygon(2 + 0j, square, 1e-9) is RegionStatus.OUTSIDE

    def test_triangle_membership(self):
        assert in_triangle(0.2 + 0.2j, 0j, 1 + 0j, 1j, 1e-12)
        assert in_triangle(0.5 + 0j, 0j, 1 + 0j, 1j, 1e-12)
        assert not in_triangle(1 + 1j, 0j, 1 + 0j, 1j, 1e-12)

    def test_collinear_triangle_raises(self):
        with pytest.raises(DegenerateGeometryError):
            in_triangle(0j, 0j, 1 + 0j, 2 + 0j, 1e-12)

    def test_max_outward_excess(self, square):
        assert max_outward_excess(square, np.array([2 + 0.5j, 0.5 + 0.5j])) == pytest.approx(1.0)
        assert max_outward_excess(square, np.array([0.25 + 0.75j])) == 0.0
        assert max_outward_excess(square, np.array([], dtype=complex)) == 0.0


@pytest.mark.unit
class TestConvexHull:
    def test_square_order(self):
        hull = convex_hull([1 + 1j, 0j, 1 + 0j, 1j, 0.5 + 0.5j])
        assert hull.orientation is Orientation.CLOCKWISE
        assert hull.vertices == UNIT_SQUARE_CW

    def test_collinear_boundary_points_dropped(self):
        hull = convex_hull([0j, 0.5 + 0j, 1 + 0j, 1 + 1j, 0.5 + 1j, 1j])
        assert len(hull) == 4

    def test_independent_of_input_order(self):
        rng = np.random.default_rng(5)
        points = rng.normal(size=500) + 1j * rng.normal(size=500)
        first = convex_hull(points)
        second = convex_hull(rng.permutation(points))
        assert first.vertices == second.vertices
        assert first.is_convex()
        assert max_outward_excess(first, points) <= 1e-12

    def test_idempotent(self):
        rng = np.random.default_rng(23)
        points = rng.normal(size=2000) + 1j * rng.normal(size=2000)
        hull = convex_hull(points)
        again = convex_hull(np.array(hull.vertices))
        assert again.vertices == hull.vertices
        assert again.orientation is Orientation.CLOCKWISE

    def test_starts_at_lowest_vertex(self):
        rng = np.random.default_rng(9)
        points = rng.uniform(-1, 1, size=200) + 1j * rng.uniform(-1, 1, size=200)
        start = convex_hull(points).vertices[0]
        assert start.real == points.real.min()

    @pytest.mark.parametrize(
        "points",
        [[0j, 1 + 0j], [0j, 1 + 1j, 2 + 2j, 3 + 3j], [1j, 1j, 1j, 1j]],
    )
    def test_degenerate_inputs(self, points):
        with pytest.raises(DegenerateGeometryError):
            convex_hull(points)

    def test_non_finite_input(self):
        with pytest.raises(DegenerateGeometryError):
            convex_hull([0j, 1 + 0j, complex(float("nan"), 0.0)])


@pytest.mark.unit
class TestHullMatch:
    def test_identical_hulls(self, square):
        report = hull_match(square, square, 1e-9)
        assert report.passed
        assert report.same_cycle
        assert report.counts_agree
        assert report.max_predicted_to_empirical == 0.0

    def test_extra_collinear_vertex_still_passes(self, square):
        empirical = Polygon.from_vertices((0j, 1j, 1 + 1j, 1 + 0j, 0.5 + 1e-12j))
        report = hull_match(square, empirical, 1e-9)
        assert report.passed
        assert not report.counts_agree
        assert not report.same_cycle

    def test_shifted_hull_fails(self, square):
        shifted = Polygon(tuple(v + 0.01 for v in UNIT_SQUARE_CW), Orientation.CLOCKWISE)
        report = hull_match(square, shifted, 1e-6)
        assert not report.passed
        assert report.unmatched_predicted == [0, 1, 2, 3]
        assert report.to_dict()['passed'] is False

    def test_rotated_start_is_same_cycle(self, square):
        rotated = Polygon(UNIT_SQUARE_CW[2:] + UNIT_SQUARE_CW[:2], Orientation.CLOCKWISE)
        report = hull_match(square, rotated, 1e-12)
        assert report.passed
        assert report.same_cycle
        assert report.to_dict()['same_cycle'] is True

    def test_larger_hull_is_not_same_cycle(self, square):
        larger = Polygon.from_vertices((0j, 2j, 2 + 2j, 2 + 0j))
        report = hull_match(square, larger, 1e-12)
        assert not report.passed
        assert not report.same_cycle

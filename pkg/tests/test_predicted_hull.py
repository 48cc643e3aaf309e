"""
Tests for the closed-form hull polygon and the orientation facts behind it
"""

import math

import numpy as np
import pytest

from dragon_hull.core import make_params
from dragon_hull.errors import BoundaryAmbiguousError, OpenRegionError
from dragon_hull.geometry import Orientation, RegionStatus, in_convex_polygon
from dragon_hull.theory import (
    BoundaryAmbiguous,
    PartitionCell,
    boundary_angles,
    cell_grid,
    escape_check,
    escape_polynomial,
    escape_polynomial_derivative,
    eta_root,
    loop_side_checks,
    make_cell,
    predicted_hull,
    turn_angle_deviation,
    turn_signs,
)

ETA_4 = math.acos(2.0**-0.75)


@pytest.mark.unit
class TestPredictedHull:
    """Vertices b_0, z_0..z_k, w_1..w_k in clockwise order"""

    def test_quarter_turn(self):
        hull = predicted_hull(make_params(math.pi / 4))
        assert hull.k == 4
        assert [str(v.label) for v in hull.vertices] == [
            "b0", "z0", "z1", "z2", "z3", "z4", "w1", "w2", "w3", "w4",
        ]
        polygon = hull.polygon
        assert polygon.orientation is Orientation.CLOCKWISE
        assert polygon.area < 0
        assert polygon.is_convex()
        assert not hull.at_eta4

    @pytest.mark.parametrize("k", range(4, 11))
    def test_cell_midpoints(self, k):
        eta = make_cell(k).midpoint
        hull = predicted_hull(make_params(eta))
        assert isinstance(hull.cell, PartitionCell)
        assert hull.k == k
        assert len(hull.vertices) == 2 * k + 2
        assert hull.polygon.is_convex()

    def test_eta4_gives_eight_vertices(self):
        hull = predicted_hull(make_params(ETA_4))
        assert isinstance(hull.cell, BoundaryAmbiguous)
        assert hull.at_eta4
        assert hull.k == 3
        assert len(hull.vertices) == 8

    def test_open_region(self):
        with pytest.raises(OpenRegionError):
            predicted_hull(make_params(1.0))

    def test_inner_boundary(self):
        with pytest.raises(BoundaryAmbiguousError) as excinfo:
            predicted_hull(make_params(eta_root(5)))
        assert excinfo.value.k == 5

    def test_zero_and_one_inside(self):
        for k in range(4, 9):
            polygon = predicted_hull(make_params(make_cell(k).midpoint)).polygon
            assert in_convex_polygon(0j, polygon, 1e-12) is not RegionStatus.OUTSIDE
            assert in_convex_polygon(1 + 0j, polygon, 1e-12) is not RegionStatus.OUTSIDE


@pytest.mark.unit
class TestAngles:
    """Constant turns along both chains and the junction turns"""

    def test_turn_angles_equal_pi_minus_eta(self):
        for eta in np.linspace(0.05, math.pi / 3 - 0.05, 50):
            assert turn_angle_deviation(make_params(float(eta)), 10) <= 1e-9

    @pytest.mark.parametrize("k", range(4, 9))
    def test_boundary_angles_in_open_half_turn(self, k):
        cell = make_cell(k)
        for eta in cell_grid(cell, 20):
            for angle in boundary_angles(make_params(float(eta)), k).values():
                assert 0.0 < angle < math.pi

    def test_turn_signs_track_sign_functions(self):
        rng = np.random.default_rng(7)
        for eta in rng.uniform(0.05, math.pi / 3 - 0.05, size=200):
            p = make_params(float(eta))
            for k in range(1, 13):
                assert turn_signs(p, k).consistent()

    def test_loop_sides_for_b0(self):
        for eta in np.linspace(0.05, ETA_4 - 1e-3, 40):
            assert loop_side_checks(make_params(float(eta))).holds()

    def test_b0_crosses_l2_above_eta4(self):
        # the left-of-l_2 quantity is c |a|^3 sin(eta) (2 - c), and c = 2 at eta_4
        sides = loop_side_checks(make_params(1.0))
        assert sides.b0_right_of_l1 < 0
        assert sides.b0_left_of_l2 < 0

    @pytest.mark.parametrize("k", range(4, 9))
    def test_loop_sides_for_zk_above_pi_over_k(self, k):
        cell = make_cell(k)
        etas = [float(eta) for eta in cell_grid(cell, 20) if cell.in_first_case(float(eta))]
        etas.append(math.pi / k)
        for eta in etas:
            assert loop_side_checks(make_params(eta), k).holds(tol=1e-12)


@pytest.mark.unit
class TestEscapeCheck:
    """z_6 against the 8-vertex polygon near pi/3"""

    def test_printed_quartic(self):
        assert escape_polynomial(1.0) == 0.0
        assert escape_polynomial_derivative(1.0) == -1.0

    def test_report_near_pi_over_3(self):
        report = escape_check(make_params(math.pi / 3 - 0.01))
        assert report.derivative_discrepancy
        assert report.polynomial_at_1 == 0.0
        assert report.notes
        # the direct orientation and the quartic agree in sign here
        assert report.orientation > 0
        assert report.polynomial_value > 0
        assert not report.confirms_escape

    def test_report_serializes(self):
        payload = escape_check(make_params(1.0)).to_dict()
        assert payload['z6_status'] in {status.value for status in RegionStatus}
        assert set(payload) >= {'orientation', 'polynomial_value', 'confirms_escape'}

"""
Predicted Hull

For eta in [eta_{k+1}, eta_k) the hull of K_eta is the polygon
b_0, z_0, ..., z_k, w_1, ..., w_k in clockwise order; at eta_4 itself it is
b_0, z_0, ..., z_3, w_1, ..., w_3.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any

from ..config import get_settings
from ..core.coding import LabeledPoint
from ..core.params import DragonParams
from ..core.points import candidate_set, point_b, point_w, point_z
from ..errors import BoundaryAmbiguousError, DegenerateGeometryError, OpenRegionError
from ..geometry.hull import convex_hull
from ..geometry.polygon import (
    Orientation,
    Polygon,
    RegionStatus,
    in_convex_polygon,
    is_convex_clockwise,
)
from ..geometry.primitives import angle_uvw, orient_im
from .partition import BoundaryAmbiguous, CellResult, UpperRegion, partition_cell
from .sign_functions import phi, psi

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PredictedHull:
    """
    Closed-form hull vertices, clockwise.

    Attributes:
        eta: Curve parameter
        k: Largest z/w index among the vertices (3 at eta = eta_4)
        vertices: b_0, z_0..z_k, w_1..w_k
        cell: Partition cell eta was resolved to
    """

    eta: float
    k: int
    vertices: tuple[LabeledPoint, ...]
    cell: CellResult

    def __post_init__(self) -> None:
        if len(self.vertices) != 2 * self.k + 2:
            raise DegenerateGeometryError(
                f"expected {2 * self.k + 2} vertices for k={self.k}, got {len(self.vertices)}"
            )
        if not is_convex_clockwise([v.value for v in self.vertices]):
            raise DegenerateGeometryError(
                f"predicted vertices at eta={self.eta!r} do not form a clockwise convex cycle"
            )

    @property
    def polygon(self) -> Polygon:
        return Polygon(tuple(v.value for v in self.vertices), Orientation.CLOCKWISE)

    @property
    def at_eta4(self) -> bool:
        return isinstance(self.cell, BoundaryAmbiguous)


def predicted_hull(p: DragonParams, tol: float | None = None) -> PredictedHull:
    """
    Build the closed-form hull for p.eta.

    Raises:
        OpenRegionError: eta in (eta_4, pi/3)
        BoundaryAmbiguousError: eta within tol of eta_k for some k >= 5
        DegenerateGeometryError: the vertex cycle fails the convexity check
    """
    cell = partition_cell(p.eta, tol)

    if isinstance(cell, UpperRegion):
        raise OpenRegionError(
            f"eta={p.eta!r} lies in (eta_4, pi/3) = ({cell.lower!r}, pi/3); no closed form"
        )
    if isinstance(cell, BoundaryAmbiguous):
        if cell.k != 4:
            raise BoundaryAmbiguousError(cell.k, cell.eta_k)
        logger.info("eta=%.17g treated as eta_4: 8-vertex hull", p.eta)
        k = 3
    else:
        k = cell.k

    return PredictedHull(eta=p.eta, k=k, vertices=tuple(candidate_set(p, k)), cell=cell)


def escape_polynomial(x: float) -> float:
    """h(x) = 6 - 9x - 6x^2 + 16x^3 - 7x^4"""
    return 6.0 - 9.0 * x - 6.0 * x**2 + 16.0 * x**3 - 7.0 * x**4


def escape_polynomial_derivative(x: float) -> float:
    return -9.0 - 12.0 * x + 48.0 * x**2 - 28.0 * x**3


@dataclass
class EscapeReport:
    """
    Whether z_6 escapes the 8-vertex polygon above eta_4.

    orientation is Im((conj(b_0) - conj(z_6)) (w_3 - z_6)) evaluated directly
    and is authoritative; the polynomial fields are advisory only.
    """

    eta: float
    orientation: float
    polynomial_value: float
    polynomial_at_1: float
    derivative_at_1: float
    stated_derivative_positive: bool
    derivative_discrepancy: bool
    z6_status: RegionStatus
    notes: list[str] = field(default_factory=list)

    @property
    def z6_outside(self) -> bool:
        return self.z6_status is RegionStatus.OUTSIDE

    @property
    def confirms_escape(self) -> bool:
        """Negative orientation together with z_6 outside co{b_0, z_0..z_3, w_1..w_3}."""
        return self.orientation < 0 and self.z6_outside

    def to_dict(self) -> dict[str, Any]:
        return {
            'eta': self.eta,
            'orientation': self.orientation,
            'polynomial_value': self.polynomial_value,
            'polynomial_at_1': self.polynomial_at_1,
            'derivative_at_1': self.derivative_at_1,
            'stated_derivative_positive': self.stated_derivative_positive,
            'derivative_discrepancy': self.derivative_discrepancy,
            'z6_status': self.z6_status.value,
            'z6_outside': self.z6_outside,
            'confirms_escape': self.confirms_escape,
            'notes': list(self.notes),
        }


def escape_check(p: DragonParams) -> EscapeReport:
    b0, z6, w3 = point_b(p, 0), point_z(p, 6), point_w(p, 3)
    orientation = orient_im(b0, z6, w3)
    x = p.mod_a2

    derivative = escape_polynomial_derivative(1.0)
    discrepancy = not derivative > 0
    notes = []
    if discrepancy:
        message = (
            f"h'(1) = {derivative:g} contradicts the stated h'(1) > 0; "
            "using the direct orientation value"
        )
        logger.warning(message)
        notes.append(message)

    eight = [lp.value for lp in candidate_set(p, 3)]
    hull = convex_hull(eight)
    status = in_convex_polygon(z6, hull, get_settings().tol)
    if len(hull) != len(eight):
        notes.append(f"co(b_0, z_0..z_3, w_1..w_3) has {len(hull)} vertices at eta={p.eta!r}")

    return EscapeReport(
        eta=p.eta,
        orientation=orientation,
        polynomial_value=escape_polynomial(x),
        polynomial_at_1=escape_polynomial(1.0),
        derivative_at_1=derivative,
        stated_derivative_positive=True,
        derivative_discrepancy=discrepancy,
        z6_status=status,
        notes=notes,
    )


@dataclass(frozen=True)
class TurnSigns:
    """Orientation quantities at z_k and w_1 with the sign functions they track."""

    k: int
    turn_at_zk: float
    phi: float
    turn_at_w1: float
    psi: float

    def consistent(self, skip_below: float = 1e-12) -> bool:
        """Signs agree wherever the sign function is not numerically zero."""
        checks = [(self.turn_at_zk, self.phi), (self.turn_at_w1, self.psi)]
        return all(
            (turn > 0) == (value > 0) for turn, value in checks if abs(value) >= skip_below
        )


def turn_signs(p: DragonParams, k: int) -> TurnSigns:
    """
    Turn at z_k is Im((conj z_{k-1} - conj z_k)(w_1 - z_k)), tracking Phi_k;
    turn at w_1 is Im((conj z_k - conj w_1)(w_2 - w_1)), tracking Psi_k.
    """

    zkm1, zk = point_z(p, k - 1), point_z(p, k)
    w1, w2 = point_w(p, 1), point_w(p, 2)
    return TurnSigns(
        k=k,
        turn_at_zk=orient_im(zkm1, zk, w1),
        phi=phi(p, k),
        turn_at_w1=orient_im(zk, w1, w2),
        psi=psi(p, k),
    )


def boundary_angles(p: DragonParams, k: int) -> dict[str, float]:
    """The four turns where the z-chain meets the w-chain and where the cycle closes."""

    z = {i: point_z(p, i) for i in (0, k - 1, k)}
    w = {i: point_w(p, i) for i in (1, 2, k - 1, k)}
    b0 = point_b(p, 0)
    return {
        f"z{k - 1} z{k} w1": angle_uvw(z[k - 1], z[k], w[1]),
        f"z{k} w1 w2": angle_uvw(z[k], w[1], w[2]),
        f"w{k - 1} w{k} b0": angle_uvw(w[k - 1], w[k], b0),
        f"w{k} b0 z0": angle_uvw(w[k], b0, z[0]),
    }


def turn_angles(p: DragonParams, n_max: int = 10) -> dict[str, float]:
    """Angles b_0 z_0 z_1, z_n z_{n+1} z_{n+2} and w_n w_{n+1} w_{n+2}; all equal pi - eta."""

    angles = {"b0 z0 z1": angle_uvw(point_b(p, 0), point_z(p, 0), point_z(p, 1))}
    for n in range(n_max + 1):
        angles[f"z{n} z{n + 1} z{n + 2}"] = angle_uvw(
            point_z(p, n), point_z(p, n + 1), point_z(p, n + 2)
        )
        angles[f"w{n} w{n + 1} w{n + 2}"] = angle_uvw(
            point_w(p, n), point_w(p, n + 1), point_w(p, n + 2)
        )
    return angles


def turn_angle_deviation(p: DragonParams, n_max: int = 10) -> float:
    target = math.pi - p.eta
    return max(abs(angle - target) for angle in turn_angles(p, n_max).values())


@dataclass(frozen=True)
class LoopSides:
    """
    Side tests against l_1 (through 0) and l_2 (through 1), both directed along -a/|a|.

    Right of l_1 means Im((conj z_0 - conj q)(0 - q)) < 0; left of l_2 means
    Im((1 - conj q)(w_1 - q)) > 0.
    """

    b0_right_of_l1: float
    b0_left_of_l2: float
    zk_right_of_l1: float | None = None
    zk_left_of_l2: float | None = None

    def holds(self, tol: float = 0.0) -> bool:
        ok = self.b0_right_of_l1 < 0 and self.b0_left_of_l2 > 0
        if self.zk_right_of_l1 is not None and self.zk_left_of_l2 is not None:
            # z_k sits on l_1 when k eta is a multiple of pi
            ok = ok and self.zk_right_of_l1 <= tol and self.zk_left_of_l2 > 0
        return ok


def loop_side_checks(p: DragonParams, k: int | None = None) -> LoopSides:
    z0, b0, w1 = point_z(p, 0), point_b(p, 0), point_w(p, 1)
    sides = LoopSides(
        b0_right_of_l1=orient_im(z0, b0, 0j),
        b0_left_of_l2=orient_im(1 + 0j, b0, w1),
    )
    if k is None:
        return sides
    zk = point_z(p, k)
    return LoopSides(
        b0_right_of_l1=sides.b0_right_of_l1,
        b0_left_of_l2=sides.b0_left_of_l2,
        zk_right_of_l1=orient_im(z0, zk, 0j),
        zk_left_of_l2=orient_im(1 + 0j, zk, w1),
    )

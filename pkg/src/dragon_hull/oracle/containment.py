"""
Containment Checks

Executable versions of the membership facts behind the closed-form hull:
hull invariance under f_1 and f_2, the disk property of the z-spiral, and the
triangle/quadrilateral memberships of the tail points.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from ..config import get_settings
from ..core.params import DragonParams, arg
from ..core.points import candidate_set, map_f1, map_f2, point_b, point_w, point_z
from ..errors import DomainError
from ..geometry.hull import convex_hull
from ..geometry.polygon import Polygon, RegionStatus, in_convex_polygon, in_triangle
from ..geometry.primitives import distance_to_segment, orient_im
from ..theory.partition import PartitionCell, eta_root, partition_cell

logger = logging.getLogger(__name__)


def check_invariance(p: DragonParams, hull: Polygon, tol: float | None = None) -> bool:
    """f_1 and f_2 images of every hull vertex stay inside the hull (boundary allowed)."""

    tol = get_settings().tol if tol is None else tol
    for vertex in hull.vertices:
        for image in (map_f1(p, vertex), map_f2(p, vertex)):
            if in_convex_polygon(image, hull, tol) is RegionStatus.OUTSIDE:
                logger.debug("image %r of vertex %r leaves the hull", image, vertex)
                return False
    return True


def check_disk_property(
    p: DragonParams,
    j: int,
    tail: int = 60,
    samples: int | None = None,
    tol: float | None = None,
) -> bool:
    """
    The tail z_j, z_{j+1}, ... lies in the closed disk of radius |z_j| about 0,
    while the broken line z_0 z_1 ... z_{j-1} stays outside it.

    The broken line is tested both by exact segment distances and by
    sampling each segment (settings.segment_samples points by default).

    Raises:
        DomainError: eta >= eta_4 or j < 1
    """
    if j < 1:
        raise DomainError(f"disk property needs j >= 1, got {j}")
    if p.eta >= eta_root(4):
        raise DomainError(f"disk property holds on (0, eta_4); eta={p.eta!r} is above")
    settings = get_settings()
    tol = settings.tol if tol is None else tol
    samples = settings.segment_samples if samples is None else samples

    radius = abs(point_z(p, j))
    if any(abs(point_z(p, i)) > radius + tol for i in range(j, j + tail + 1)):
        return False

    chain = [point_z(p, i) for i in range(j)]
    if min(abs(z) for z in chain) <= radius - tol:
        return False

    t = np.linspace(0.0, 1.0, samples)
    for start, end in zip(chain, chain[1:]):
        if distance_to_segment(0j, start, end) <= radius - tol:
            return False
        if np.abs(start + t * (end - start)).min() <= radius - tol:
            return False
    return True


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass
class ContainmentCheck:
    name: str
    status: CheckStatus
    instances: int = 0
    detail: str = ""
    first_failure: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            'name': self.name,
            'status': self.status.value,
            'instances': self.instances,
            'detail': self.detail,
            'first_failure': self.first_failure,
        }


@dataclass
class MembershipReport:
    eta: float
    checks: list[ContainmentCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.status is not CheckStatus.FAILED for check in self.checks)

    def get(self, name: str) -> ContainmentCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {
            'eta': self.eta,
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks],
        }


Instance = tuple[str, Callable[[], bool]]


def _run(name: str, instances: Iterable[Instance], detail: str = "") -> ContainmentCheck:
    """Evaluate instances in order, stopping at the first failure."""

    count = 0
    for label, test in instances:
        count += 1
        if not test():
            return ContainmentCheck(name, CheckStatus.FAILED, count, detail, first_failure=label)
    return ContainmentCheck(name, CheckStatus.PASSED, count, detail)


def _skip(name: str, reason: str) -> ContainmentCheck:
    return ContainmentCheck(name, CheckStatus.SKIPPED, detail=reason)


def _in_hull(point: complex, corners: list[complex], tol: float) -> bool:
    return in_convex_polygon(point, convex_hull(corners), tol) is not RegionStatus.OUTSIDE


def _w0_triangles(p: DragonParams, tol: float) -> ContainmentCheck:
    name = "w0-triangles"
    w0 = point_w(p, 0)
    if not w0.real < 0:
        return _skip(name, f"w_0 = {w0.real:.6g} >= 0")
    z2, z3 = point_z(p, 2), point_z(p, 3)
    return _run(
        name,
        [
            ("w0 in (0, z2, z3)", lambda: in_triangle(w0, 0j, z2, z3, tol)),
            (
                "w0 in (0, conj z2, conj z3)",
                lambda: in_triangle(w0, 0j, z2.conjugate(), z3.conjugate(), tol),
            ),
        ],
    )


def _half_plane(p: DragonParams, cell: PartitionCell) -> ContainmentCheck:
    """1 z_j w_1 turns into (0, pi) for j >= k; checked for j = k..3k."""

    w1 = point_w(p, 1)
    return _run(
        "half-plane",
        (
            (f"j={j}", lambda j=j: orient_im(1 + 0j, point_z(p, j), w1) > 0)
            for j in range(cell.k, 3 * cell.k + 1)
        ),
    )


def _quadrilaterals(p: DragonParams, cell: PartitionCell, tol: float) -> ContainmentCheck:
    k = cell.k
    first = cell.in_first_case(p.eta)
    top = 2 * k - 3 if first else 2 * k - 1
    a, b0, w1 = p.a, point_b(p, 0), point_w(p, 1)

    def instances() -> Iterable[Instance]:
        for j in range(k + 1, top + 1):
            zj, zprev = point_z(p, j), point_z(p, j - 1)
            wj, wprev = point_w(p, j), point_w(p, j - 1)
            z_corners = [0j, zprev, w1, 1 + 0j]
            w_corners = [1 + 0j, wprev, b0, a]
            yield f"z{j}", lambda q=zj, corners=z_corners: _in_hull(q, corners, tol)
            yield f"w{j}", lambda q=wj, corners=w_corners: _in_hull(q, corners, tol)

    return _run("quadrilaterals", instances(), "case C1" if first else "case C2")


def _zero_one(p: DragonParams, cell: PartitionCell, tol: float) -> ContainmentCheck:
    hull = convex_hull([lp.value for lp in candidate_set(p, cell.k)])

    def inside(q: complex) -> bool:
        return in_convex_polygon(q, hull, tol) is not RegionStatus.OUTSIDE

    return _run(
        "zero-one",
        [("0 in co(V_k)", lambda: inside(0j)), ("1 in co(V_k)", lambda: inside(1 + 0j))],
    )


def _tail_triangles(p: DragonParams, cell: PartitionCell, tol: float) -> ContainmentCheck:
    """Where z_{n+1}, z_{n+2} (and their f_2 images) land, n = 2k-3 (C1) or 2k-1 (C2)."""

    name = "tail-triangles"
    k, eta = cell.k, p.eta
    n = 2 * k - 3 if cell.in_first_case(eta) else 2 * k - 1
    z = {i: point_z(p, i) for i in (0, 1, n, n + 1, n + 2)}
    w = {i: point_w(p, i) for i in (0, 1, n, n + 1, n + 2)}
    one, zero, a = 1 + 0j, 0j, p.a

    angle = arg(z[n])
    if abs(angle - eta) <= tol:
        logger.warning("arg z_%d equals eta within %g; using the (0, eta] case", n, tol)
        angle = eta

    if 0 < angle <= eta:
        detail = f"arg z{n} in (0, eta]"
        triangles = [
            (f"z{n + 1} in (0, z0, 1)", z[n + 1], (zero, z[0], one)),
            (f"z{n + 2} in (0, z1, z0)", z[n + 2], (zero, z[1], z[0])),
            (f"w{n + 1} in (1, w0, a)", w[n + 1], (one, w[0], a)),
            (f"w{n + 2} in (1, w1, w0)", w[n + 2], (one, w[1], w[0])),
        ]
    elif eta < angle <= 2 * eta:
        detail = f"arg z{n} in (eta, 2 eta]"
        triangles = [
            (f"z{n + 1} in (0, 1, z{n})", z[n + 1], (zero, one, z[n])),
            (f"z{n + 2} in (0, z0, 1)", z[n + 2], (zero, z[0], one)),
            (f"w{n + 1} in (1, a, w{n})", w[n + 1], (one, a, w[n])),
            (f"w{n + 2} in (1, w0, a)", w[n + 2], (one, w[0], a)),
        ]
    else:
        return ContainmentCheck(
            name,
            CheckStatus.FAILED,
            detail=f"arg z{n} = {angle!r} outside (0, 2 eta]",
            first_failure=f"arg z{n}",
        )

    return _run(
        name,
        (
            (label, lambda q=q, tri=tri: in_triangle(q, *tri, tol))
            for label, q, tri in triangles
        ),
        detail,
    )


def check_memberships(p: DragonParams, tol: float | None = None) -> MembershipReport:
    """
    Run every membership check whose hypotheses hold at p.eta.

    Checks that need a partition cell are skipped outside the cells.
    """
    tol = get_settings().tol if tol is None else tol
    report = MembershipReport(eta=p.eta)
    report.checks.append(_w0_triangles(p, tol))

    cell = partition_cell(p.eta)
    if not isinstance(cell, PartitionCell):
        reason = f"eta={p.eta!r} is not inside a partition cell"
        for name in ("half-plane", "quadrilaterals", "zero-one", "tail-triangles"):
            report.checks.append(_skip(name, reason))
        return report

    report.checks.append(_half_plane(p, cell))
    report.checks.append(_quadrilaterals(p, cell, tol))
    report.checks.append(_zero_one(p, cell, tol))
    report.checks.append(_tail_triangles(p, cell, tol))

    for check in report.checks:
        if check.status is CheckStatus.FAILED:
            logger.info("%s failed at eta=%.17g: %s", check.name, p.eta, check.first_failure)
    return report

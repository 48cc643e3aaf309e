"""
Oracle Suites
Checks that build hulls, sample the attractor or walk the containment facts
"""

from __future__ import annotations

from typing import Any

from ...core.params import make_params
from ...oracle.containment import (
    CheckStatus,
    check_disk_property,
    check_invariance,
    check_memberships,
)
from ...oracle.sampler import compare_with_prediction
from ...theory.hull import predicted_hull
from ...theory.partition import make_cell
from ..base_suite import BaseSuite, SuiteTier, pick

MEMBERSHIP_FRACTIONS = (0.2, 0.4, 0.6, 0.8)


def _midpoints(kwargs: dict[str, Any], default_cells: list[int]) -> list[float]:
    if kwargs.get('etas'):
        return list(kwargs['etas'])
    return [make_cell(k).midpoint for k in pick(kwargs, 'cells', default_cells)]


def _spread_in_cells(kwargs: dict[str, Any]) -> list[float]:
    """Explicit etas, else four interior points in each of cells 4..8 (twenty values)."""

    if kwargs.get('etas'):
        return list(kwargs['etas'])
    etas = []
    for k in pick(kwargs, 'cells', range(4, 9)):
        cell = make_cell(k)
        etas.extend(cell.lower + f * (cell.upper - cell.lower) for f in MEMBERSHIP_FRACTIONS)
    return etas


class InvarianceSuite(BaseSuite):
    name = "invariance"
    tier = SuiteTier.FAST
    description = "f_1 and f_2 map the predicted hull into itself"

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        etas = _midpoints(kwargs, list(range(4, 9)))
        failures = []
        for eta in etas:
            p = make_params(eta)
            if not check_invariance(p, predicted_hull(p).polygon):
                failures.append(eta)
        return not failures, {'etas_checked': len(etas), 'failures': failures}, {}


class VertexCountSuite(BaseSuite):
    """Empirical hulls have 2k + 2 vertices and match the prediction."""

    name = "vertex-count"
    tier = SuiteTier.ORACLE
    description = "Sampled hull vertex count and distances against the closed form"

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        etas = _midpoints(kwargs, list(range(4, 9)))
        depth = kwargs.get('depth')
        rows = []
        for eta in etas:
            report = compare_with_prediction(make_params(eta), depth)
            rows.append(
                {
                    'eta': eta,
                    'predicted': report.predicted_count,
                    'empirical': report.empirical_count,
                    'match': report.passed,
                    'same_cycle': report.same_cycle,
                    'max_sample_excess': report.metadata['max_sample_excess'],
                }
            )
        passed = all(row['match'] and row['same_cycle'] for row in rows)
        return passed, {'rows': rows}, {'depth': depth}


class MembershipSuite(BaseSuite):
    name = "membership"
    tier = SuiteTier.ORACLE
    description = "Triangle, quadrilateral and half-plane memberships of tail points"

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        etas = _spread_in_cells(kwargs)
        failures = []
        skipped = 0
        for eta in etas:
            report = check_memberships(make_params(eta))
            skipped += sum(check.status is CheckStatus.SKIPPED for check in report.checks)
            if not report.passed:
                failed = [c.to_dict() for c in report.checks if c.status is CheckStatus.FAILED]
                failures.append({'eta': eta, 'checks': failed})
        value = {'etas_checked': len(etas), 'skipped_checks': skipped, 'failures': failures}
        return not failures, value, {}


class DiskSuite(BaseSuite):
    name = "disk"
    tier = SuiteTier.FAST
    description = "The z-spiral tail stays in the disk of radius |z_j|, the head outside"

    def __init__(self, j_max: int = 10):
        self.j_max = j_max

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        etas = _spread_in_cells(kwargs)
        failures = [
            {'eta': eta, 'j': j}
            for eta in etas
            for j in range(1, self.j_max + 1)
            if not check_disk_property(make_params(eta), j)
        ]
        value = {'instances': len(etas) * self.j_max, 'failures': failures}
        return not failures, value, {'j_max': self.j_max}

"""
Coding Suites
Positivity criterion on dragon codings and synthetic containment witnesses
"""

from __future__ import annotations

import math
from typing import Any

from ...codings.extreme import (
    containment_witness,
    dragon_ifs,
    extreme_necessary_check,
    synthetic_rotation_ifs,
)
from ...core.coding import DRAGON_PERIOD, Coding, vertex_coding
from ...core.params import make_params
from ...core.points import candidate_set, coded_point, point_by_label
from ...errors import OpenRegionError
from ...theory.hull import predicted_hull
from ..base_suite import BaseSuite, SuiteTier, pick

WITNESS_ALPHAS = (2 * math.pi / 3, math.pi / 2, math.pi / 5, 1.0)
WITNESS_RADII = (0.5, 0.9)


class CodingSuite(BaseSuite):
    """
    Known verdicts: (2211)^inf passes, 1^inf and (21)^inf fail, and every
    predicted vertex has a passing coding that evaluates to the vertex.
    """

    name = "coding"
    tier = SuiteTier.FAST
    description = "Extreme-point coding criterion on the dragon IFS"

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        etas = pick(kwargs, 'etas', [math.pi / 4, math.pi / 6, 0.3, 0.9])
        problems: list[str] = []
        vertices_checked = 0

        for eta in etas:
            p = make_params(eta)
            ifs = dragon_ifs(p)
            expected = [((2, 2, 1, 1), True), ((1,), False), ((2, 1), False)]
            for period, should_pass in expected:
                verdict = extreme_necessary_check(ifs, Coding((), period))
                if verdict.passes != should_pass:
                    problems.append(f"eta={eta!r}: period {period} gave {verdict.status.value}")

            try:
                labels = [v.label for v in predicted_hull(p).vertices]
            except OpenRegionError:
                labels = [lp.label for lp in candidate_set(p, 4)]

            for label in labels:
                vertices_checked += 1
                coding = vertex_coding(label)
                if coding.period != DRAGON_PERIOD:
                    problems.append(f"{label} has period {coding.period}")
                if not extreme_necessary_check(ifs, coding).passes:
                    problems.append(f"eta={eta!r}: coding of {label} fails positivity")
                if abs(coded_point(p, coding) - point_by_label(p, label)) > 1e-10:
                    problems.append(f"eta={eta!r}: coding of {label} misses the point")

        value = {'vertices_checked': vertices_checked, 'problems': problems}
        return not problems, value, {'etas': etas}


class ContainmentSuite(BaseSuite):
    """Failing periods have a fixed point strictly inside a finite orbit hull."""

    name = "containment"
    tier = SuiteTier.FAST
    description = "Surrounding-orbit witnesses on synthetic rotation IFSs"

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        witnesses: list[dict[str, Any]] = []
        missing: list[dict[str, float]] = []
        for alpha in WITNESS_ALPHAS:
            for r in WITNESS_RADII:
                ifs = synthetic_rotation_ifs(r, alpha)
                p = containment_witness(ifs, (1,), 2.0 + 0j)
                if p is None:
                    missing.append({'alpha': alpha, 'r': r})
                else:
                    witnesses.append({'alpha': alpha, 'r': r, 'p': p})

        value = {'witnesses': witnesses, 'missing': missing}
        return not missing, value, {'grid': len(WITNESS_ALPHAS) * len(WITNESS_RADII)}

"""
Advisory Suites
Reported for inspection; they never fail a verification run
"""

from __future__ import annotations

import math
from typing import Any

from ...core.params import make_params
from ...theory.hull import escape_check
from ..base_suite import BaseSuite, SuiteTier, pick


class EscapeSuite(BaseSuite):
    """Direct orientation of (b_0, z_6, w_3) above eta_4 next to the quartic h."""

    name = "z6-escape"
    aliases = ("remark62",)
    tier = SuiteTier.ADVISORY
    description = "Does z_6 leave the 8-vertex polygon near pi/3"

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        etas = pick(kwargs, 'etas', [math.pi / 3 - 0.01])
        reports = [escape_check(make_params(eta)).to_dict() for eta in etas]
        return all(r['confirms_escape'] for r in reports), {'reports': reports}, {}

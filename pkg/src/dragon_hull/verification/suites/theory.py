"""
Closed-Form Suites
Angle identities, sign-function facts and partition roots
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from ...config import get_settings
from ...core.params import make_params
from ...theory.hull import boundary_angles, turn_angle_deviation, turn_signs
from ...theory.partition import (
    PartitionCell,
    cell_grid,
    eta_root,
    make_cell,
    partition_cell,
    root_bracket,
)
from ...theory.sign_functions import phi, psi, theta
from ..base_suite import BaseSuite, SuiteTier, pick, spread_etas


class AnglesSuite(BaseSuite):
    """b_0 z_0 z_1, z_n z_{n+1} z_{n+2} and w_n w_{n+1} w_{n+2} all equal pi - eta."""

    name = "angles"
    tier = SuiteTier.FAST
    description = "Constant turn angle pi - eta along both point chains"

    def __init__(self, n_max: int = 10, tol: float = 1e-9):
        self.n_max = n_max
        self.tol = tol

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        etas = pick(kwargs, 'etas', spread_etas(50))
        deviations = [turn_angle_deviation(make_params(eta), self.n_max) for eta in etas]
        worst = int(np.argmax(deviations))
        value = {
            'max_deviation': deviations[worst],
            'worst_eta': etas[worst],
            'etas_checked': len(etas),
        }
        return deviations[worst] <= self.tol, value, {'n_max': self.n_max, 'tol': self.tol}


def _cell_etas(
    kwargs: dict[str, Any], default_cells: list[int]
) -> list[tuple[PartitionCell, float]]:
    """(cell, eta) pairs: explicit etas resolved to their cells, else cell grids."""

    if kwargs.get('etas'):
        pairs = []
        for eta in kwargs['etas']:
            cell = partition_cell(eta)
            if isinstance(cell, PartitionCell):
                pairs.append((cell, eta))
        return pairs

    n = kwargs.get('grid_points') or get_settings().grid_points
    pairs = []
    for k in pick(kwargs, 'cells', default_cells):
        cell = make_cell(k)
        pairs.extend((cell, float(eta)) for eta in cell_grid(cell, n))
    return pairs


class BoundaryAnglesSuite(BaseSuite):
    """Where the chains meet: all four turns lie in (0, pi)."""

    name = "boundary-angles"
    tier = SuiteTier.FAST
    description = "Junction angles at z_k, w_1, w_k and b_0 lie in (0, pi)"

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        pairs = _cell_etas(kwargs, list(range(4, 9)))
        checked, failure = 0, None
        for cell, eta in pairs:
            for label, angle in boundary_angles(make_params(eta), cell.k).items():
                checked += 1
                if not 0.0 < angle < math.pi and failure is None:
                    failure = {'eta': eta, 'k': cell.k, 'angle': label, 'value': angle}
        value = {'instances': checked, 'first_failure': failure}
        return failure is None and checked > 0, value, {'cells': sorted({c.k for c, _ in pairs})}


class SignsSuite(BaseSuite):
    """
    Sign results on cell grids.

    Phi_k > 0 on the cell; Phi_j < 0 for j = k+1..2k-3 on [pi/k, eta_k) and
    j = k+1..2k-1 on [eta_{k+1}, pi/k); Theta_j, Psi_j > 0 for j = k..3k.
    """

    name = "signs"
    tier = SuiteTier.FAST
    description = "Phi, Theta and Psi signs on partition-cell grids"

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        pairs = _cell_etas(kwargs, list(range(4, 11)))
        checked = 0
        violations: list[dict[str, Any]] = []

        def expect(ok: bool, eta: float, function: str, j: int, value: float) -> None:
            nonlocal checked
            checked += 1
            if not ok:
                violations.append({'eta': eta, 'function': function, 'j': j, 'value': value})

        for cell, eta in pairs:
            p, k = make_params(eta), cell.k
            value = phi(p, k)
            expect(value > 0, eta, "phi", k, value)
            top = 2 * k - 3 if cell.in_first_case(eta) else 2 * k - 1
            for j in range(k + 1, top + 1):
                value = phi(p, j)
                expect(value < 0, eta, "phi", j, value)
            for j in range(k, 3 * k + 1):
                value = theta(p, j)
                expect(value > 0, eta, "theta", j, value)
                value = psi(p, j)
                expect(value > 0, eta, "psi", j, value)

        value = {
            'instances': checked,
            'violations': len(violations),
            'first_violation': violations[0] if violations else None,
        }
        return not violations and checked > 0, value, {'cells': sorted({c.k for c, _ in pairs})}


class RootsSuite(BaseSuite):
    """Bracket signs, monotone roots and the closed form of eta_4."""

    name = "roots"
    tier = SuiteTier.FAST
    description = "Partition roots: bracket signs, monotonicity, eta_4 = arccos(2^-3/4)"

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        k_max = kwargs.get('k_max') or 20
        problems: list[str] = []

        for k in range(4, k_max + 1):
            lo, hi = root_bracket(k)
            if not phi(make_params(lo), k) > 0:
                problems.append(f"Phi_{k}(pi/{k}) <= 0")
            if not phi(make_params(hi), k) < 0:
                problems.append(f"Phi_{k} >= 0 at the upper bracket end")
            if not eta_root(k + 1) < eta_root(k):
                problems.append(f"eta_{k + 1} >= eta_{k}")

        eta4 = eta_root(4)
        closed_form = math.acos(2.0**-0.75)
        error = abs(eta4 - closed_form)
        if error > 1e-10:
            problems.append(f"eta_4 differs from arccos(2^-3/4) by {error:.3g}")

        value = {'eta_4': eta4, 'eta_4_error': error, 'problems': problems}
        return not problems, value, {'k_max': k_max}


class TurnSignsSuite(BaseSuite):
    """Turns at z_k and w_1 have the signs of Phi_k and Psi_k."""

    name = "turn-signs"
    tier = SuiteTier.FAST
    description = "Orientation at z_k / w_1 matches the signs of Phi_k / Psi_k"

    def __init__(self, draws: int = 200, k_max: int = 12, seed: int = 7):
        self.draws = draws
        self.k_max = k_max
        self.seed = seed

    def evaluate(self, **kwargs: Any) -> tuple[bool, dict[str, Any], dict[str, Any]]:
        rng = np.random.default_rng(kwargs.get('seed', self.seed))
        default = rng.uniform(0.05, math.pi / 3 - 0.05, size=self.draws).tolist()
        etas = pick(kwargs, 'etas', default)

        checked, failure = 0, None
        for eta in etas:
            p = make_params(eta)
            for k in range(1, self.k_max + 1):
                checked += 1
                signs = turn_signs(p, k)
                if not signs.consistent() and failure is None:
                    failure = {'eta': eta, 'k': k, 'phi': signs.phi, 'turn_at_zk': signs.turn_at_zk}

        value = {'instances': checked, 'first_failure': failure}
        return failure is None, value, {'k_max': self.k_max, 'seed': self.seed}

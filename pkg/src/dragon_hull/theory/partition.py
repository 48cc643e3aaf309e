"""
Parameter Partition

(0, pi/3) = [eta_4, pi/3) + union over k >= 4 of [eta_{k+1}, eta_k), where
eta_k is the unique zero of Phi_k in (pi/k, pi/(k-1)).
"""

from __future__ import annotations

import logging
import math
import threading
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..config import get_settings
from ..core.params import ETA_MAX, make_params
from ..errors import BracketError, DomainError
from .sign_functions import phi

logger = logging.getLogger(__name__)

_ROOT_CACHE: dict[tuple[int, float], float] = {}
_ROOT_LOCK = threading.Lock()


def root_bracket(k: int) -> tuple[float, float]:
    """Open interval holding eta_k; for k = 4 the top end is pulled inside the domain."""

    if k < 4:
        raise DomainError(f"partition roots exist for k >= 4, got {k}")
    lower = math.pi / k
    if k == 4:
        # Phi_4 vanishes at pi/3 itself
        return lower, ETA_MAX - get_settings().eta4_upper_margin
    return lower, math.pi / (k - 1)


def _phi_at(eta: float, k: int) -> float:
    return phi(make_params(eta), k)


def eta_root(k: int, tol: float | None = None) -> float:
    """
    Locate eta_k by bisection.

    Args:
        k: Index, k >= 4
        tol: Final bracket width in radians

    Returns:
        Midpoint of the final bracket

    Raises:
        DomainError: k < 4 or tol <= 0
        BracketError: Phi_k does not change sign from + to - across the bracket
    """
    settings = get_settings()
    width = settings.bisection_width if tol is None else tol
    if not width > 0:
        raise DomainError(f"bisection width must be positive, got {width!r}")

    key = (k, width)
    cached = _ROOT_CACHE.get(key)
    if cached is not None:
        return cached

    lo, hi = root_bracket(k)
    phi_lo, phi_hi = _phi_at(lo, k), _phi_at(hi, k)
    if not (phi_lo > 0 and phi_hi < 0):
        raise BracketError(
            f"Phi_{k} has no +/- sign change on ({lo!r}, {hi!r}): {phi_lo!r}, {phi_hi!r}"
        )

    iterations = 0
    while hi - lo > width and iterations < settings.bisection_max_iter:
        mid = 0.5 * (lo + hi)
        if _phi_at(mid, k) > 0:
            lo = mid
        else:
            hi = mid
        iterations += 1

    root = 0.5 * (lo + hi)
    logger.debug("eta_%d = %.17g after %d bisection steps", k, root, iterations)
    with _ROOT_LOCK:
        _ROOT_CACHE.setdefault(key, root)
    return _ROOT_CACHE[key]


def clear_root_cache() -> None:
    with _ROOT_LOCK:
        _ROOT_CACHE.clear()


@dataclass(frozen=True)
class PartitionCell:
    """[eta_{k+1}, eta_k): the parameter range with 2k + 2 hull vertices."""

    k: int
    lower: float
    upper: float

    def __post_init__(self) -> None:
        if self.k < 4:
            raise DomainError(f"partition cells start at k = 4, got {self.k}")
        if not self.lower < self.upper:
            raise DomainError(f"empty cell [{self.lower!r}, {self.upper!r})")
        top = ETA_MAX if self.k == 4 else math.pi / (self.k - 1)
        if not math.pi / self.k < self.upper < top:
            raise DomainError(f"eta_{self.k} = {self.upper!r} outside its bracket")
        if not math.pi / (self.k + 1) < self.lower < math.pi / self.k:
            raise DomainError(f"eta_{self.k + 1} = {self.lower!r} outside its bracket")

    def contains(self, eta: float) -> bool:
        return self.lower <= eta < self.upper

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    def in_first_case(self, eta: float) -> bool:
        """eta in [pi/k, eta_k); otherwise eta lies in [eta_{k+1}, pi/k)."""
        return eta >= math.pi / self.k

    def to_dict(self) -> dict[str, float | int]:
        return {'k': self.k, 'eta_lower': self.lower, 'eta_upper': self.upper}


@dataclass(frozen=True)
class UpperRegion:
    """[eta_4, pi/3), where no closed-form hull is known."""

    lower: float

    def to_dict(self) -> str:
        return "upper_region"


@dataclass(frozen=True)
class BoundaryAmbiguous:
    """eta within tolerance of a computed root eta_k."""

    k: int
    eta_k: float

    def to_dict(self) -> dict[str, float | int]:
        return {'boundary_k': self.k, 'eta_k': self.eta_k}


CellResult = Union[PartitionCell, UpperRegion, BoundaryAmbiguous]


def make_cell(k: int, tol: float | None = None) -> PartitionCell:
    return PartitionCell(k=k, lower=eta_root(k + 1, tol), upper=eta_root(k, tol))


def partition_cell(eta: float, tol: float | None = None) -> CellResult:
    """
    Resolve the partition cell of eta.

    The scan starts at max(4, floor(pi/eta) - 1); since eta_k lies in
    (pi/k, pi/(k-1)), the matching k satisfies pi/eta - 1 < k < pi/eta + 1.

    Raises:
        DomainError: eta outside (0, pi/3)
    """
    make_params(eta)
    tol = get_settings().boundary_tol if tol is None else tol

    eta4 = eta_root(4)
    if abs(eta - eta4) <= tol:
        return BoundaryAmbiguous(4, eta4)
    if eta > eta4:
        return UpperRegion(lower=eta4)

    k = max(4, math.floor(math.pi / eta) - 1)
    last = math.floor(math.pi / eta) + 2
    while k <= last:
        upper, lower = eta_root(k), eta_root(k + 1)
        if abs(eta - upper) <= tol:
            return BoundaryAmbiguous(k, upper)
        if abs(eta - lower) <= tol:
            return BoundaryAmbiguous(k + 1, lower)
        if lower <= eta < upper:
            return PartitionCell(k=k, lower=lower, upper=upper)
        k += 1

    raise BracketError(f"no partition cell found for eta={eta!r}")


@dataclass(frozen=True)
class EtaRow:
    k: int
    eta_k: float
    bracket_lower: float
    bracket_upper: float

    def to_dict(self) -> dict[str, float | int]:
        return {
            'k': self.k,
            'eta_k': self.eta_k,
            'pi_over_k': self.bracket_lower,
            'pi_over_k_minus_1': self.bracket_upper,
        }


def eta_table(k_max: int, tol: float | None = None) -> list[EtaRow]:
    """Rows k, eta_k, pi/k, pi/(k-1) for k = 4..k_max."""

    if k_max < 4:
        raise DomainError(f"k_max must be at least 4, got {k_max}")
    return [
        EtaRow(k, eta_root(k, tol), math.pi / k, math.pi / (k - 1))
        for k in range(4, k_max + 1)
    ]


def cell_grid(cell: PartitionCell, n: int | None = None, margin: float | None = None) -> np.ndarray:
    """n evenly spaced eta values inside the cell, margin away from both ends."""

    settings = get_settings()
    n = settings.grid_points if n is None else n
    margin = settings.grid_margin if margin is None else margin
    if n < 1:
        raise DomainError(f"grid needs at least one point, got {n}")
    if 2 * margin >= cell.upper - cell.lower:
        raise DomainError(f"margin {margin!r} leaves no room inside cell k={cell.k}")
    return np.linspace(cell.lower + margin, cell.upper - margin, n)

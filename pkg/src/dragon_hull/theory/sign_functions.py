"""
Sign Functions

Phi_k, Theta_k and Psi_k. Their signs decide which candidate points turn
convexly on the hull boundary.
"""

from __future__ import annotations

import math

from ..core.params import DragonParams
from ..errors import DomainError


def _check_index(k: int) -> None:
    if k < 1:
        raise DomainError(f"sign functions need k >= 1, got {k}")


def phi(p: DragonParams, k: int) -> float:
    """(1 - |a|^4) sin((k-1) eta) - |a|^3 sin((k-2) eta) + |a|^k sin(eta)"""

    _check_index(k)
    eta, m = p.eta, p.mod_a
    return (
        (1.0 - m**4) * math.sin((k - 1) * eta)
        - m**3 * math.sin((k - 2) * eta)
        + m**k * math.sin(eta)
    )


def phi_alt(p: DragonParams, k: int) -> float:
    """Same value as phi, expanded with sin((k-2) eta) = sin((k-1) eta) / |a| - sin(k eta)."""

    _check_index(k)
    eta, m = p.eta, p.mod_a
    return (
        (1.0 - m**2 - m**4) * math.sin((k - 1) * eta)
        + m**3 * math.sin(k * eta)
        + m**k * math.sin(eta)
    )


def theta(p: DragonParams, k: int) -> float:
    """(1 - |a|^4) sin(eta) + |a|^{k+1} sin(k eta)"""

    _check_index(k)
    eta, m = p.eta, p.mod_a
    return (1.0 - m**4) * math.sin(eta) + m ** (k + 1) * math.sin(k * eta)


def psi(p: DragonParams, k: int) -> float:
    """sin(eta) + |a|^{k-2} sin((k+1) eta)"""

    _check_index(k)
    eta, m = p.eta, p.mod_a
    return math.sin(eta) + m ** (k - 2) * math.sin((k + 1) * eta)

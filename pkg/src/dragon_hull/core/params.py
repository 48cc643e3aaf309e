"""
Dragon Parameters
eta-derived scalars of the dragon IFS f_1(z) = a z, f_2(z) = 1 - conj(a) z
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ..config import get_settings
from ..errors import DomainError

ComplexScalar = complex

ETA_MAX = math.pi / 3


def ensure_finite(z: ComplexScalar, name: str = "z") -> ComplexScalar:
    """Reject NaN or infinite components before they enter any computation."""

    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name} must have finite components, got {z!r}")
    return z


def arg(z: ComplexScalar) -> float:
    """Argument of z in [0, 2*pi)."""

    if z == 0:
        raise DomainError("arg(0) is undefined")
    theta = math.atan2(z.imag, z.real)
    if theta < 0:
        theta += 2 * math.pi
    # atan2 of a tiny negative imaginary part can round up to exactly 2*pi
    return 0.0 if theta >= 2 * math.pi else theta


@dataclass(frozen=True)
class DragonParams:
    """
    All scalars derived from eta.

    Attributes:
        eta: Parameter in (0, pi/3), radians
        a: e^{-i eta} / (2 cos eta)
        mod_a: |a| = 1 / (2 cos eta)
        c: 1 / (1 - |a|^4), so that z_0 = c a
    """

    eta: float
    a: ComplexScalar
    mod_a: float
    c: float

    @property
    def a_conj(self) -> ComplexScalar:
        return self.a.conjugate()

    @property
    def mod_a2(self) -> float:
        return self.mod_a * self.mod_a

    @property
    def mod_a4(self) -> float:
        return self.mod_a2 * self.mod_a2

    def identity_residuals(self) -> dict[str, float]:
        """Residuals of a + conj(a) = 1 and 2|a|cos(eta) = 1."""
        return {
            'a_plus_conj': abs(self.a + self.a_conj - 1.0),
            'mod_cos': abs(2.0 * self.mod_a * math.cos(self.eta) - 1.0),
        }


def make_params(eta: float) -> DragonParams:
    """
    Build DragonParams for eta in the open interval (0, pi/3).

    Raises:
        DomainError: eta is not finite or lies outside (0, pi/3)
    """
    if not math.isfinite(eta) or not 0.0 < eta < ETA_MAX:
        raise DomainError(f"eta must lie in the open interval (0, pi/3), got {eta!r}")

    cos_eta = math.cos(eta)
    a = cmath.exp(-1j * eta) / (2.0 * cos_eta)
    mod_a = 1.0 / (2.0 * cos_eta)
    c = 1.0 / (1.0 - mod_a**4)
    params = DragonParams(eta=eta, a=a, mod_a=mod_a, c=c)

    tol = get_settings().identity_tol
    residuals = params.identity_residuals()
    if max(residuals.values()) > tol:
        # Only reachable through a broken formula, never through user input
        raise DomainError(f"parameter identities violated at eta={eta!r}: {residuals}")

    return params

"""
Dragon Hull - Error Types

Every error raised by the library derives from DragonHullError so callers
(the CLI in particular) can map failures onto exit codes.
"""

__all__ = [
    "DragonHullError",
    "DomainError",
    "InvalidSymbolError",
    "BracketError",
    "OpenRegionError",
    "BoundaryAmbiguousError",
    "DegenerateGeometryError",
    "DegenerateOrbitError",
]


class DragonHullError(Exception):
    """Base class for all library errors."""


class DomainError(DragonHullError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class InvalidSymbolError(DragonHullError, ValueError):
    """Raised when a coding word contains a symbol with no matching map."""


class BracketError(DragonHullError):
    """Raised when a root bracket does not show the expected sign change."""


class OpenRegionError(DragonHullError):
    """Raised when a hull prediction is requested for eta in (eta_4, pi/3)."""


class BoundaryAmbiguousError(DragonHullError):
    """Raised when eta sits within tolerance of a partition root eta_k (k >= 5)."""

    def __init__(self, k: int, eta_k: float):
        super().__init__(f"eta is within tolerance of eta_{k} = {eta_k!r}")
        self.k = k
        self.eta_k = eta_k


class DegenerateGeometryError(DragonHullError, ValueError):
    """Raised for coincident points, collinear hull inputs or empty regions."""


class DegenerateOrbitError(DragonHullError, ValueError):
    """Raised when an orbit seed coincides with the fixed point it should surround."""

"""
Dragon Hull
Closed-form convex hulls of the dragon curves K_eta, with a sampling oracle
"""

from .config import Settings, get_settings
from .core import DragonParams, candidate_set, make_params
from .errors import (
    BoundaryAmbiguousError,
    DomainError,
    DragonHullError,
    OpenRegionError,
)
from .theory import PredictedHull, eta_root, partition_cell, predicted_hull

__version__ = "0.1.0"

__all__ = [
    'BoundaryAmbiguousError',
    'DomainError',
    'DragonHullError',
    'DragonParams',
    'OpenRegionError',
    'PredictedHull',
    'Settings',
    '__version__',
    'candidate_set',
    'eta_root',
    'get_settings',
    'make_params',
    'partition_cell',
    'predicted_hull',
]

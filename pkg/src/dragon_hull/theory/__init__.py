"""
Hull Theory
Sign functions, partition roots eta_k and the closed-form hull polygon
"""

from .hull import (
    EscapeReport,
    LoopSides,
    PredictedHull,
    TurnSigns,
    boundary_angles,
    escape_check,
    escape_polynomial,
    escape_polynomial_derivative,
    loop_side_checks,
    predicted_hull,
    turn_angle_deviation,
    turn_angles,
    turn_signs,
)
from .partition import (
    BoundaryAmbiguous,
    CellResult,
    EtaRow,
    PartitionCell,
    UpperRegion,
    cell_grid,
    clear_root_cache,
    eta_root,
    eta_table,
    make_cell,
    partition_cell,
    root_bracket,
)
from .sign_functions import phi, phi_alt, psi, theta

__all__ = [
    # Sign functions
    'phi',
    'phi_alt',
    'psi',
    'theta',
    # Partition
    'BoundaryAmbiguous',
    'CellResult',
    'EtaRow',
    'PartitionCell',
    'UpperRegion',
    'cell_grid',
    'clear_root_cache',
    'eta_root',
    'eta_table',
    'make_cell',
    'partition_cell',
    'root_bracket',
    # Hull
    'EscapeReport',
    'LoopSides',
    'PredictedHull',
    'TurnSigns',
    'boundary_angles',
    'escape_check',
    'escape_polynomial',
    'escape_polynomial_derivative',
    'loop_side_checks',
    'predicted_hull',
    'turn_angle_deviation',
    'turn_angles',
    'turn_signs',
]

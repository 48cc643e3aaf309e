"""
Geometry
Orientation tests, convex polygons and hulls over complex points
"""

from .hull import HullReport, convex_hull, hull_match, same_cycle
from .polygon import (
    Orientation,
    Polygon,
    RegionStatus,
    in_convex_polygon,
    in_triangle,
    is_convex_clockwise,
    max_outward_excess,
    signed_area,
)
from .primitives import angle_uvw, cross, distance_to_segment, orient_im

__all__ = [
    'HullReport',
    'Orientation',
    'Polygon',
    'RegionStatus',
    'angle_uvw',
    'convex_hull',
    'cross',
    'distance_to_segment',
    'hull_match',
    'in_convex_polygon',
    'in_triangle',
    'is_convex_clockwise',
    'max_outward_excess',
    'orient_im',
    'same_cycle',
    'signed_area',
]

"""
Planar Primitives

The plane is C. The angle /_uvw is the counterclockwise angle from u - v to
w - v, and /_uvw in (0, pi) iff Im((conj(u) - conj(v)) (w - v)) > 0.
"""

from __future__ import annotations

from ..core.params import arg, ensure_finite
from ..errors import DegenerateGeometryError


def cross(u: complex, v: complex) -> float:
    """u.x * v.y - u.y * v.x, i.e. Im(conj(u) v)."""
    return u.real * v.imag - u.imag * v.real


def orient_im(u: complex, v: complex, w: complex) -> float:
    """Im((conj(u) - conj(v)) (w - v)); positive iff /_uvw lies in (0, pi)."""
    return cross(u - v, w - v)


def angle_uvw(u: complex, v: complex, w: complex) -> float:
    """
    arg((w - v) / (u - v)) in [0, 2*pi).

    Raises:
        DegenerateGeometryError: u or w coincides with v
    """
    u, v, w = ensure_finite(u, "u"), ensure_finite(v, "v"), ensure_finite(w, "w")
    if u == v or w == v:
        raise DegenerateGeometryError("angle undefined for coincident points")
    return arg((w - v) / (u - v))


def distance_to_segment(p: complex, start: complex, end: complex) -> float:
    """Euclidean distance from p to the closed segment [start, end]."""

    edge = end - start
    length2 = abs(edge) ** 2
    if length2 == 0.0:
        return abs(p - start)
    t = ((p - start) * edge.conjugate()).real / length2
    t = min(1.0, max(0.0, t))
    return abs(p - (start + t * edge))

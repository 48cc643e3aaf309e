"""
SVG Rendering

Draws the sample cloud, the predicted hull polygon and its labeled vertices.
Output depends only on the inputs: fixed number formatting, deterministic
thinning of the cloud, no timestamps.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from ..core.coding import LabeledPoint
from ..geometry.polygon import Polygon

WIDTH = 800
MARGIN_FRACTION = 0.1
MAX_CLOUD_POINTS = 20000


def _pad(extra: str) -> str:
    return f" {extra}" if extra else ""


class SVG:
    """String-building SVG writer in page coordinates."""

    def __init__(self) -> None:
        self.svg = ""

    def header(self, width: int, height: int) -> None:
        self.svg += (
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">\n'
            f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>\n'
        )

    def group_start(self, group_id: str, extra: str = "") -> None:
        self.svg += f'<g id="{group_id}"{_pad(extra)}>\n'

    def group_end(self) -> None:
        self.svg += "</g>\n"

    def circle(self, x: float, y: float, r: float, extra: str = "") -> None:
        self.svg += f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{r:g}"{_pad(extra)}/>\n'

    def polygon(self, points: Sequence[tuple[float, float]], extra: str = "") -> None:
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in points)
        self.svg += f'<polygon points="{coords}"{_pad(extra)}/>\n'

    def text(self, x: float, y: float, string: str, extra: str = "") -> None:
        self.svg += f'<text x="{x:.3f}" y="{y:.3f}"{_pad(extra)}>{string}</text>\n'

    def get_svg(self) -> str:
        return f"{self.svg}</svg>\n"


class PageTransform:
    """World (complex plane) to page pixels; the imaginary axis points up."""

    def __init__(self, points: np.ndarray, width: int = WIDTH) -> None:
        xs, ys = points.real, points.imag
        span_x = float(xs.max() - xs.min()) or 1.0
        span_y = float(ys.max() - ys.min()) or 1.0
        self.min_x = float(xs.min()) - MARGIN_FRACTION * span_x
        self.max_y = float(ys.max()) + MARGIN_FRACTION * span_y
        world_w = span_x * (1.0 + 2.0 * MARGIN_FRACTION)
        world_h = span_y * (1.0 + 2.0 * MARGIN_FRACTION)
        self.scale = width / world_w
        self.width = width
        self.height = max(1, math.ceil(world_h * self.scale))

    def __call__(self, z: complex) -> tuple[float, float]:
        return (z.real - self.min_x) * self.scale, (self.max_y - z.imag) * self.scale


def thin(points: np.ndarray, max_points: int = MAX_CLOUD_POINTS) -> np.ndarray:
    """Every stride-th point, stride = ceil(n / max_points)."""

    stride = max(1, math.ceil(points.size / max_points))
    return points[::stride]


def render_hull_svg(
    cloud: np.ndarray,
    vertices: Sequence[LabeledPoint],
    predicted: Polygon | None = None,
    title: str = "",
) -> str:
    """
    Args:
        cloud: Sample points of the attractor
        vertices: Labeled predicted vertices (empty in the open region)
        predicted: Predicted hull polygon, if one exists
        title: Caption drawn in the top-left corner
    """
    cloud = np.asarray(cloud, dtype=np.complex128).ravel()
    extent = np.concatenate((cloud, np.array([lp.value for lp in vertices], dtype=np.complex128)))
    page = PageTransform(extent)

    svg = SVG()
    svg.header(page.width, page.height)
    if title:
        svg.text(8.0, 16.0, title, 'font-family="monospace" font-size="12"')

    svg.group_start("cloud", 'fill="#4a6fa5" fill-opacity="0.6"')
    for z in thin(cloud):
        x, y = page(complex(z))
        svg.circle(x, y, 0.5)
    svg.group_end()

    if predicted is not None:
        svg.group_start("hull", 'fill="none" stroke="#c0392b" stroke-width="1.5"')
        svg.polygon([page(z) for z in predicted.vertices])
        svg.group_end()

    if vertices:
        svg.group_start("vertices", 'font-family="monospace" font-size="11"')
        for lp in vertices:
            x, y = page(lp.value)
            svg.circle(x, y, 2.5, 'fill="#c0392b"')
            svg.text(x + 4.0, y - 4.0, str(lp.label))
        svg.group_end()

    return svg.get_svg()

"""
Extreme-Point Codings

Necessary condition for an eventually periodic coding prefix · (j_1 ... j_k)^inf
to code an extreme point of co(K), K the attractor of z -> a_i z + b_i:
the product a_{j_1} ... a_{j_k} must be a positive real.
"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from ..config import get_settings
from ..core.coding import Coding, validate_word
from ..core.params import DragonParams, arg, ensure_finite
from ..errors import DegenerateGeometryError, DegenerateOrbitError, DomainError
from ..geometry.hull import convex_hull
from ..geometry.polygon import RegionStatus, in_convex_polygon

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimilitudeIFS:
    """Complex similitudes z -> a_i z + b_i; symbol i addresses maps[i - 1]."""

    maps: tuple[tuple[complex, complex], ...]

    def __post_init__(self) -> None:
        maps = tuple((ensure_finite(a, "a_i"), ensure_finite(b, "b_i")) for a, b in self.maps)
        if not maps:
            raise DomainError("an IFS needs at least one map")
        for index, (lin, _) in enumerate(maps, start=1):
            if not 0.0 < abs(lin) < 1.0:
                raise DomainError(f"map {index} is not a contraction: |a_{index}| = {abs(lin)}")
        object.__setattr__(self, 'maps', maps)

    @property
    def size(self) -> int:
        return len(self.maps)

    def fixed_points(self) -> list[complex]:
        return [off / (1.0 - lin) for lin, off in self.maps]


def dragon_ifs(p: DragonParams) -> SimilitudeIFS:
    """f_1(z) = a z, f_2(z) = -conj(a) z + 1"""
    return SimilitudeIFS(maps=((p.a, 0j), (-p.a_conj, 1.0 + 0j)))


def synthetic_rotation_ifs(r: float, alpha: float) -> SimilitudeIFS:
    """Map 1 has linear part r e^{i alpha} fixing 0; map 2 fixes 2, so K is not a point."""
    return SimilitudeIFS(maps=((cmath.rect(r, alpha), 0j), (0.5 + 0j, 1.0 + 0j)))


def compose_word(ifs: SimilitudeIFS, word: Sequence[int]) -> tuple[complex, complex]:
    """(A, B) with f_{j_1} o ... o f_{j_k}(z) = A z + B."""

    symbols = validate_word(word, ifs.size)
    lin, off = 1.0 + 0j, 0j
    for symbol in reversed(symbols):
        a_i, b_i = ifs.maps[symbol - 1]
        lin, off = a_i * lin, a_i * off + b_i
    return lin, off


def linear_part_product(ifs: SimilitudeIFS, word: Sequence[int]) -> complex:
    if len(word) == 0:
        raise DomainError("linear part product of an empty word")
    symbols = validate_word(word, ifs.size)
    product = 1.0 + 0j
    for symbol in symbols:
        product *= ifs.maps[symbol - 1][0]
    return product


def period_fixed_point(ifs: SimilitudeIFS, period: Sequence[int]) -> complex:
    lin, off = compose_word(ifs, period)
    return off / (1.0 - lin)


def coded_point_ifs(ifs: SimilitudeIFS, coding: Coding) -> complex:
    """Point of K with the given eventually periodic coding."""

    coding.validate(ifs.size)
    fixed = period_fixed_point(ifs, coding.period)
    lin, off = compose_word(ifs, coding.prefix)
    return lin * fixed + off


class VerdictStatus(str, Enum):
    PASSES = "passes"
    FAILS = "fails"


@dataclass(frozen=True)
class CodingVerdict:
    """
    Outcome of the positivity test on a coding's period.

    PASSES only means the necessary condition holds; it does not certify that
    the coded point is extreme.
    """

    status: VerdictStatus
    product: complex
    alpha: float
    coded_point: complex

    @property
    def passes(self) -> bool:
        return self.status is VerdictStatus.PASSES

    def to_dict(self) -> dict[str, object]:
        return {
            'verdict': self.status.value.upper(),
            'product': {'re': self.product.real, 'im': self.product.imag},
            'modulus': abs(self.product),
            'alpha': self.alpha,
            'coded_point': {'re': self.coded_point.real, 'im': self.coded_point.imag},
        }


def is_positive_real(value: complex, tol: float) -> bool:
    return abs(value.imag) <= tol * max(abs(value), 1e-300) and value.real > 0


def extreme_necessary_check(
    ifs: SimilitudeIFS, coding: Coding, tol: float | None = None
) -> CodingVerdict:
    """Test a_{j_1} ... a_{j_k} > 0 for the period of the coding."""

    tol = get_settings().positivity_tol if tol is None else tol
    product = linear_part_product(ifs, coding.period)
    point = coded_point_ifs(ifs, coding)
    if is_positive_real(product, tol):
        return CodingVerdict(VerdictStatus.PASSES, product, 0.0, point)

    alpha = arg(product)
    logger.debug("coding %s fails positivity: alpha=%.17g", coding, alpha)
    return CodingVerdict(VerdictStatus.FAILS, product, alpha, point)


def surrounding_orbit(
    ifs: SimilitudeIFS, period: Sequence[int], v: complex, p_max: int, tol: float | None = None
) -> list[complex]:
    """
    v_p = A^p (v - w) + w for p = 1..p_max, w the fixed point of the period map.

    Raises:
        DegenerateOrbitError: v coincides with w
    """
    if p_max < 2:
        raise DomainError(f"p_max must be at least 2, got {p_max}")
    tol = get_settings().identity_tol if tol is None else tol

    lin, off = compose_word(ifs, period)
    fixed = off / (1.0 - lin)
    offset = ensure_finite(v, "v") - fixed
    if abs(offset) <= tol:
        raise DegenerateOrbitError(f"seed {v!r} coincides with the fixed point {fixed!r}")

    orbit = []
    power = 1.0 + 0j
    for _ in range(p_max):
        power *= lin
        orbit.append(power * offset + fixed)
    return orbit


def witness_bound(alpha: float, cap: int | None = None) -> int:
    """Orbit length after which p*alpha has wound more than a full turn."""

    cap = get_settings().orbit_cap if cap is None else cap
    gap = min(alpha, 2 * math.pi - alpha)
    if gap <= 0:
        return cap
    return min(cap, math.ceil(2 * math.pi / gap) + 2)


def containment_witness(
    ifs: SimilitudeIFS, period: Sequence[int], v: complex, cap: int | None = None
) -> int | None:
    """
    Smallest p >= 2 with w strictly inside co({v_1, ..., v_p}).

    Returns None when no such p exists up to the bound (the alpha = 0 case).
    """
    product = linear_part_product(ifs, period)
    alpha = arg(product)
    bound = witness_bound(alpha, cap)
    orbit = surrounding_orbit(ifs, period, v, max(bound, 2))
    fixed = period_fixed_point(ifs, period)

    for p in range(3, len(orbit) + 1):
        try:
            hull = convex_hull(orbit[:p])
        except DegenerateGeometryError:
            continue
        scale = max(abs(z - fixed) for z in orbit[:p])
        if in_convex_polygon(fixed, hull, 1e-12 * scale) is RegionStatus.INSIDE:
            logger.debug("containment witness found at p=%d (alpha=%.6f)", p, alpha)
            return p
    return None


def check_not_singleton(ifs: SimilitudeIFS, tol: float | None = None) -> bool:
    """True iff the maps do not all share one fixed point."""

    tol = get_settings().identity_tol if tol is None else tol
    fixed = ifs.fixed_points()
    return any(abs(point - fixed[0]) > tol for point in fixed[1:])


__all__ = [
    'CodingVerdict',
    'SimilitudeIFS',
    'VerdictStatus',
    'check_not_singleton',
    'coded_point_ifs',
    'compose_word',
    'containment_witness',
    'dragon_ifs',
    'extreme_necessary_check',
    'is_positive_real',
    'linear_part_product',
    'period_fixed_point',
    'surrounding_orbit',
    'synthetic_rotation_ifs',
    'witness_bound',
]

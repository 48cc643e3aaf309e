"""
Dragon Maps and Closed-Form Points

z_k = c a^{k+1}, w_k = 1 - c|a|^2 a^k, b_k = a + c|a|^4 a^k
"""

from __future__ import annotations

from collections.abc import Iterable

from ..errors import DomainError
from .coding import Coding, LabeledPoint, PointFamily, PointLabel, validate_word
from .params import ComplexScalar, DragonParams, ensure_finite


def map_f1(p: DragonParams, z: ComplexScalar) -> ComplexScalar:
    """f_1(z) = a z"""
    return p.a * ensure_finite(z)


def map_f2(p: DragonParams, z: ComplexScalar) -> ComplexScalar:
    """f_2(z) = 1 - conj(a) z"""
    return 1.0 - p.a_conj * ensure_finite(z)


def point_a_power(p: DragonParams, k: int) -> ComplexScalar:
    """a^k by repeated multiplication, so closed and recursive forms round alike."""

    if k < 0:
        raise DomainError(f"power must be non-negative, got {k}")
    result = 1.0 + 0.0j
    for _ in range(k):
        result *= p.a
    return result


def point_z(p: DragonParams, k: int) -> ComplexScalar:
    return p.c * point_a_power(p, k + 1)


def point_w(p: DragonParams, k: int) -> ComplexScalar:
    """w_k; w_0 = 1 - c|a|^2 is real and never a candidate vertex."""
    return 1.0 - p.c * p.mod_a2 * point_a_power(p, k)


def point_b(p: DragonParams, k: int) -> ComplexScalar:
    return p.a + p.c * p.mod_a4 * point_a_power(p, k)


_FAMILY_FUNCS = {
    PointFamily.Z: point_z,
    PointFamily.W: point_w,
    PointFamily.B: point_b,
}


def point_by_label(p: DragonParams, label: PointLabel) -> ComplexScalar:
    return _FAMILY_FUNCS[label.family](p, label.index)


def label(family: str, index: int) -> PointLabel:
    return PointLabel(PointFamily(family), index)


def candidate_set(p: DragonParams, k: int) -> list[LabeledPoint]:
    """
    V_k = {b_0, z_0, ..., z_k, w_1, ..., w_k}, in that order.

    Args:
        p: Dragon parameters
        k: Largest index, k >= 1

    Returns:
        2k + 2 labeled points
    """
    if k < 1:
        raise DomainError(f"candidate set needs k >= 1, got {k}")

    points = [LabeledPoint(label("b", 0), point_b(p, 0))]
    points.extend(LabeledPoint(label("z", i), point_z(p, i)) for i in range(k + 1))
    points.extend(LabeledPoint(label("w", i), point_w(p, i)) for i in range(1, k + 1))
    return points


def apply_word(p: DragonParams, word: Iterable[int], z: ComplexScalar) -> ComplexScalar:
    """
    f_{i_1} o ... o f_{i_k} (z); the last symbol acts first.

    Raises:
        InvalidSymbolError: a symbol is not 1 or 2
    """
    symbols = validate_word(word, alphabet_size=2)
    result = ensure_finite(z)
    for symbol in reversed(symbols):
        result = map_f1(p, result) if symbol == 1 else map_f2(p, result)
    return result


def compose_affine(p: DragonParams, word: Iterable[int]) -> tuple[complex, complex]:
    """(A, B) with f_word(z) = A z + B."""

    symbols = validate_word(word, alphabet_size=2)
    lin, off = 1.0 + 0.0j, 0.0 + 0.0j
    for symbol in reversed(symbols):
        if symbol == 1:
            lin, off = p.a * lin, p.a * off
        else:
            lin, off = -p.a_conj * lin, 1.0 - p.a_conj * off
    return lin, off


def coded_point(p: DragonParams, coding: Coding) -> ComplexScalar:
    """Point of K_eta with coding prefix · (period)^inf."""

    coding.validate(alphabet_size=2)
    lin, off = compose_affine(p, coding.period)
    fixed = off / (1.0 - lin)
    return apply_word(p, coding.prefix, fixed)

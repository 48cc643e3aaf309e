"""
Dragon Core
eta-parameterized IFS, closed-form point families and coding evaluation
"""

from .coding import (
    DRAGON_PERIOD,
    Coding,
    LabeledPoint,
    PointFamily,
    PointLabel,
    parse_word,
    validate_word,
    vertex_coding,
)
from .params import ETA_MAX, ComplexScalar, DragonParams, arg, ensure_finite, make_params
from .points import (
    apply_word,
    candidate_set,
    coded_point,
    compose_affine,
    label,
    map_f1,
    map_f2,
    point_a_power,
    point_b,
    point_by_label,
    point_w,
    point_z,
)

__all__ = [
    # Parameters
    'ComplexScalar',
    'DragonParams',
    'ETA_MAX',
    'arg',
    'ensure_finite',
    'make_params',
    # Codings and labels
    'Coding',
    'DRAGON_PERIOD',
    'LabeledPoint',
    'PointFamily',
    'PointLabel',
    'parse_word',
    'validate_word',
    'vertex_coding',
    # Maps and points
    'apply_word',
    'candidate_set',
    'coded_point',
    'compose_affine',
    'label',
    'map_f1',
    'map_f2',
    'point_a_power',
    'point_b',
    'point_by_label',
    'point_w',
    'point_z',
]

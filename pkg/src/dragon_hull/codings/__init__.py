"""
Extreme Codings
Positivity test for periodic codings of extreme points of co(K)
"""

from .extreme import (
    CodingVerdict,
    SimilitudeIFS,
    VerdictStatus,
    check_not_singleton,
    coded_point_ifs,
    compose_word,
    containment_witness,
    dragon_ifs,
    extreme_necessary_check,
    is_positive_real,
    linear_part_product,
    period_fixed_point,
    surrounding_orbit,
    synthetic_rotation_ifs,
    witness_bound,
)

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

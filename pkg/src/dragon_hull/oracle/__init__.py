"""
Oracle
Brute-force attractor sampling, empirical hulls and executable containment checks
"""

from .containment import (
    CheckStatus,
    ContainmentCheck,
    MembershipReport,
    check_disk_property,
    check_invariance,
    check_memberships,
)
from .sampler import (
    SampleCloud,
    candidate_depth,
    compare_with_prediction,
    empirical_hull,
    sample_attractor,
)

__all__ = [
    'CheckStatus',
    'ContainmentCheck',
    'MembershipReport',
    'SampleCloud',
    'candidate_depth',
    'check_disk_property',
    'check_invariance',
    'check_memberships',
    'compare_with_prediction',
    'empirical_hull',
    'sample_attractor',
]

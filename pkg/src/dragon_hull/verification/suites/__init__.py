"""
Verification Suites
Closed-form, oracle and advisory checks behind the verify command
"""

from .advisory import EscapeSuite
from .codings import CodingSuite, ContainmentSuite
from .oracle import DiskSuite, InvarianceSuite, MembershipSuite, VertexCountSuite
from .theory import AnglesSuite, BoundaryAnglesSuite, RootsSuite, SignsSuite, TurnSignsSuite

# Registration order is the order `verify` runs them in
ALL_SUITES = (
    AnglesSuite,
    BoundaryAnglesSuite,
    SignsSuite,
    RootsSuite,
    TurnSignsSuite,
    InvarianceSuite,
    ContainmentSuite,
    VertexCountSuite,
    CodingSuite,
    MembershipSuite,
    DiskSuite,
    EscapeSuite,
)

__all__ = [
    'ALL_SUITES',
    'AnglesSuite',
    'BoundaryAnglesSuite',
    'CodingSuite',
    'ContainmentSuite',
    'DiskSuite',
    'EscapeSuite',
    'InvarianceSuite',
    'MembershipSuite',
    'RootsSuite',
    'SignsSuite',
    'TurnSignsSuite',
    'VertexCountSuite',
]

"""
Verification
Runnable property suites and the registry the verify command draws from
"""

from .base_suite import BaseSuite, SuiteResult, SuiteTier
from .registry import SuiteRegistry
from .suites import ALL_SUITES

_global_registry: SuiteRegistry | None = None


def build_registry() -> SuiteRegistry:
    """Fresh registry holding one instance of every suite."""
    registry = SuiteRegistry()
    for suite_cls in ALL_SUITES:
        registry.register(suite_cls())
    return registry


def get_registry() -> SuiteRegistry:
    """
    Get global suite registry instance.

    Returns:
        Global SuiteRegistry with all suites registered
    """
    global _global_registry
    if _global_registry is None:
        _global_registry = build_registry()
    return _global_registry


__all__ = [
    'ALL_SUITES',
    'BaseSuite',
    'SuiteRegistry',
    'SuiteResult',
    'SuiteTier',
    'build_registry',
    'get_registry',
]

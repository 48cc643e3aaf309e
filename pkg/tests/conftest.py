"""Pytest configuration helpers for the test suite."""

from __future__ import annotations

import asyncio
import inspect

import pytest

from dragon_hull.config import use_settings_file


def pytest_configure(config: pytest.Config) -> None:
    """Register custom markers used across the suite."""
    config.addinivalue_line(
        "markers", "asyncio: Tests that require asynchronous event loop support"
    )


def pytest_pyfunc_call(pyfuncitem: pytest.Function) -> bool | None:
    """Allow running async test functions without external plugins."""
    if inspect.iscoroutinefunction(pyfuncitem.obj):
        funcargs = {name: pyfuncitem.funcargs[name] for name in pyfuncitem._fixtureinfo.argnames}
        loop = asyncio.new_event_loop()
        try:
            loop.run_until_complete(pyfuncitem.obj(**funcargs))
        finally:
            loop.close()
        return True
    return None


@pytest.fixture(autouse=True)
def default_settings():
    """Every test starts from the packaged defaults."""
    use_settings_file(None)
    yield
    use_settings_file(None)

"""
Suite Registry
Central registry for all verification suites
"""

from __future__ import annotations

from typing import Any

from .base_suite import BaseSuite, SuiteResult, SuiteTier


class SuiteRegistry:
    """
    Central registry for verification suites.

    Provides:
    - Suite registration and lookup by name or alias
    - JSON-Schema catalog export
    - Tier-based organization
    """

    def __init__(self) -> None:
        """Initialize empty registry"""
        self._suites: dict[str, BaseSuite] = {}
        self._aliases: dict[str, str] = {}
        self._suites_by_tier: dict[SuiteTier, list[BaseSuite]] = {tier: [] for tier in SuiteTier}

    def register(self, suite: BaseSuite) -> None:
        """
        Register a suite in the registry.

        Raises:
            ValueError: If a suite with the same name is already registered
        """
        for name in (suite.name, *suite.aliases):
            if name in self._suites or name in self._aliases:
                raise ValueError(f"Suite '{name}' already registered")

        self._suites[suite.name] = suite
        self._aliases.update(dict.fromkeys(suite.aliases, suite.name))
        self._suites_by_tier[suite.tier].append(suite)

    def resolve(self, name: str) -> str | None:
        """Canonical suite name for a name or alias."""
        if name in self._suites:
            return name
        return self._aliases.get(name)

    def get(self, name: str) -> BaseSuite | None:
        canonical = self.resolve(name)
        return None if canonical is None else self._suites[canonical]

    def get_by_tier(self, tier: SuiteTier) -> list[BaseSuite]:
        return self._suites_by_tier[tier].copy()

    def names(self) -> list[str]:
        return list(self._suites)

    def run(self, names: list[str] | None = None, **kwargs: Any) -> dict[str, SuiteResult]:
        """
        Execute the named suites (all when names is None). Aliases resolve to
        their canonical names, which key the result.

        Raises:
            KeyError: An unknown suite name was requested
        """
        requested = self.names() if not names else names
        unknown = [name for name in requested if self.resolve(name) is None]
        if unknown:
            raise KeyError(f"unknown suites: {', '.join(unknown)}")
        selected = dict.fromkeys(self._aliases.get(name, name) for name in requested)
        return {name: self._suites[name].execute(**kwargs) for name in selected}

    def catalog(self) -> dict[str, Any]:
        """
        Export the suite catalog.

        Returns:
            Dict with all suite schemas and per-tier counts
        """
        catalog: dict[str, Any] = {
            "version": "1.0.0",
            "total_suites": len(self._suites),
            "suites_by_tier": {
                tier.value: len(suites) for tier, suites in self._suites_by_tier.items()
            },
            "suites": [],
        }

        for suite in self._suites.values():
            schema = suite.get_schema()
            schema['tier'] = suite.tier.value
            schema['version'] = suite.version
            if suite.aliases:
                schema['aliases'] = list(suite.aliases)
            catalog['suites'].append(schema)

        return catalog

    def __len__(self) -> int:
        return len(self._suites)

    def __contains__(self, name: str) -> bool:
        return self.resolve(name) is not None

    def __repr__(self) -> str:
        counts = ", ".join(
            f"{tier.value[0].upper()}:{len(suites)}"
            for tier, suites in self._suites_by_tier.items()
        )
        return f"<SuiteRegistry: {len(self)} suites ({counts})>"

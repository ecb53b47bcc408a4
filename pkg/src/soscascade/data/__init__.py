"""Paths to the shipped data files.

The station topology is a documented reconstruction (see the README): the
module inventory is fixed, but the exact as-built interconnections are not
public, so numbers computed from it describe this file rather than the real
station.
"""

from importlib.resources import files
from pathlib import Path


def _path(name: str) -> Path:
    return Path(str(files(__package__).joinpath(name)))


def default_topology_path() -> Path:
    """Reconstructed 14-system station interconnection graph."""
    return _path("gateway_topology.json")


def default_catalog_path() -> Path:
    """Security catalog: C&DH/ECC components, threats, and controls."""
    return _path("security_catalog.json")


def collision_scenario_path() -> Path:
    """Collision scenario seeded at the robotic arm with impact 0.33."""
    return _path("collision_scenario.json")


def baseline_strategy_path() -> Path:
    """Uniform protection of every node at diffusion factor 0.3."""
    return _path("strategy_uniform_baseline.json")


def habitation_only_strategy_path() -> Path:
    """Protection of core habitation modules only (0.3 vs 1.0 elsewhere)."""
    return _path("strategy_habitation_only.json")

"""Protection strategies and their translation into per-node diffusion factors.

A strategy names which nodes get the protected (low) diffusion factor and
which remain at the unprotected value.  Applying a strategy to a graph
yields a concrete :class:`AlphaAssignment` consumed by the propagation
engine.  Strategies never worsen diffusion: the protected factor cannot
exceed the unprotected one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Mapping

from .errors import MissingKindMetadata, SchemaError, UnknownNode
from .graph import NodeKind, SosGraph


class StrategyRule(Enum):
    """How a strategy chooses which nodes receive the protected factor."""

    UNIFORM_BASELINE = "uniform_baseline"
    HABITATION_ONLY = "habitation_only"
    CUSTOM = "custom"


@dataclass(frozen=True)
class AlphaAssignment:
    """Per-node diffusion factor in [0, 1]; 0 isolates a node, 1 passes impact through."""

    alpha: Mapping[str, float]

    def __post_init__(self) -> None:
        bad = {v: x for v, x in self.alpha.items() if not 0.0 <= x <= 1.0}
        if bad:
            raise ValueError(f"diffusion factors outside [0, 1]: {bad}")
        object.__setattr__(self, "alpha", dict(self.alpha))

    @classmethod
    def uniform(cls, graph: SosGraph, value: float) -> "AlphaAssignment":
        return cls({v: float(value) for v in graph.node_ids})


@dataclass(frozen=True)
class StrategySpec:
    """Named rule assigning protected/unprotected diffusion factors to nodes."""

    name: str
    rule: StrategyRule
    protected_alpha: float
    unprotected_alpha: float = 1.0
    custom_overrides: Mapping[str, float] | None = None

    def __post_init__(self) -> None:
        for label, value in (
            ("protected_alpha", self.protected_alpha),
            ("unprotected_alpha", self.unprotected_alpha),
        ):
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not 0.0 <= value <= 1.0:
                raise SchemaError(f"strategy {self.name!r}: {label} must be a number in [0, 1]")
        if self.protected_alpha > self.unprotected_alpha:
            raise SchemaError(
                f"strategy {self.name!r}: protected_alpha ({self.protected_alpha}) must not "
                f"exceed unprotected_alpha ({self.unprotected_alpha})"
            )
        if self.custom_overrides is not None:
            bad = {v: x for v, x in self.custom_overrides.items() if not 0.0 <= x <= 1.0}
            if bad:
                raise SchemaError(f"strategy {self.name!r}: override factors outside [0, 1]: {bad}")
            object.__setattr__(self, "custom_overrides", dict(self.custom_overrides))


def apply_strategy(strategy: StrategySpec, graph: SosGraph) -> AlphaAssignment:
    """Materialize the per-node diffusion factors of ``strategy`` for ``graph``.

    UNIFORM_BASELINE protects every node.  HABITATION_ONLY protects nodes of
    kind Core and leaves the rest at the unprotected factor; it requires
    kind metadata on every node.  CUSTOM starts from the unprotected factor
    and applies the explicit per-node overrides.
    """
    if strategy.rule is StrategyRule.UNIFORM_BASELINE:
        alpha = {v: strategy.protected_alpha for v in graph.node_ids}
    elif strategy.rule is StrategyRule.HABITATION_ONLY:
        alpha = {}
        for p in graph.profiles:
            if p.kind is None:
                raise MissingKindMetadata(
                    f"node {p.id!r} has no kind; the habitation_only rule needs kind metadata"
                )
            alpha[p.id] = (
                strategy.protected_alpha if p.kind is NodeKind.CORE else strategy.unprotected_alpha
            )
    else:
        overrides = strategy.custom_overrides or {}
        unknown = set(overrides) - set(graph.node_ids)
        if unknown:
            raise UnknownNode(f"custom overrides name unknown nodes {sorted(unknown)}")
        alpha = {v: overrides.get(v, strategy.unprotected_alpha) for v in graph.node_ids}
    return AlphaAssignment(alpha)


# --- strategy files ----------------------------------------------------------

_STRATEGY_KEYS = frozenset(
    {"name", "rule", "protected_alpha", "unprotected_alpha", "custom_overrides"}
)


def parse_strategy(doc: object) -> StrategySpec:
    """Strategy from a JSON document; unknown keys are rejected."""
    if not isinstance(doc, dict):
        raise SchemaError("strategy document must be a JSON object")
    unknown = set(doc) - _STRATEGY_KEYS
    if unknown:
        raise SchemaError(f"strategy: unknown keys {sorted(unknown)}")
    missing = {"name", "rule", "protected_alpha"} - set(doc)
    if missing:
        raise SchemaError(f"strategy: missing keys {sorted(missing)}")
    if not isinstance(doc["name"], str) or not doc["name"]:
        raise SchemaError("strategy: 'name' must be a non-empty string")
    try:
        rule = StrategyRule(doc["rule"])
    except ValueError:
        raise SchemaError(
            f"strategy: unknown rule {doc['rule']!r}; "
            f"expected one of {sorted(r.value for r in StrategyRule)}"
        ) from None
    overrides = doc.get("custom_overrides")
    if overrides is not None and not isinstance(overrides, dict):
        raise SchemaError("strategy: 'custom_overrides' must be an object")
    return StrategySpec(
        name=doc["name"],
        rule=rule,
        protected_alpha=doc["protected_alpha"],
        unprotected_alpha=doc.get("unprotected_alpha", 1.0),
        custom_overrides=overrides,
    )


def load_strategy(path: str | Path) -> StrategySpec:
    """Read and validate a strategy JSON file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    return parse_strategy(doc)

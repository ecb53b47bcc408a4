"""Strategy comparison metrics, structural vulnerability ranking, containment.

Pure functions over immutable inputs.  The comparison runs two strategies on
the same scenario and reports two headline metrics: the relative growth of
the alternative's affected-node count over the baseline's, and how much of
the alternative's total converged impact the baseline avoids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import UnknownNode
from .graph import (
    Edge,
    SosGraph,
    articulation_points,
    betweenness_centrality,
    weighted_degree,
)
from .propagation import (
    PropagationTrace,
    Scenario,
    affected_nodes,
    run_scenario,
    total_impact,
)
from .strategy import StrategySpec, apply_strategy


@dataclass(frozen=True)
class StrategyOutcome:
    """Converged result of one strategy on one scenario."""

    strategy: str
    affected_count: int
    total_impact: float
    trace: PropagationTrace

    def to_dict(self, threshold: float) -> dict:
        return {
            "strategy": self.strategy,
            "converged": self.trace.converged,
            "steps_taken": self.trace.steps_taken,
            "affected_count": self.affected_count,
            "affected": sorted(affected_nodes(self.trace.final, threshold)),
            "total_impact": self.total_impact,
        }


@dataclass(frozen=True)
class ComparisonReport:
    """Baseline-vs-alternative outcome plus the two percentage metrics.

    ``affected_increase_pct`` is None when the baseline affects no node at
    all but the alternative does (the relative increase is undefined).
    """

    baseline: StrategyOutcome
    alternative: StrategyOutcome
    affected_increase_pct: float | None
    impact_reduction_pct: float
    threshold: float

    def to_dict(self) -> dict:
        return {
            "baseline": self.baseline.to_dict(self.threshold),
            "alternative": self.alternative.to_dict(self.threshold),
            "affected_increase_pct": self.affected_increase_pct,
            "impact_reduction_pct": self.impact_reduction_pct,
        }


def compare_strategies(
    graph: SosGraph,
    scenario: Scenario,
    baseline: StrategySpec,
    alternative: StrategySpec,
) -> ComparisonReport:
    """Run both strategies to convergence and compute the comparison metrics.

    affected_increase_pct = 100 * (affected_alt - affected_base) / affected_base
    impact_reduction_pct  = 100 * (total_alt - total_base) / total_alt

    Identical strategies therefore score exactly 0 on both metrics.
    """
    base = _run_outcome(graph, scenario, baseline)
    alt = _run_outcome(graph, scenario, alternative)

    if base.affected_count > 0:
        affected_increase = 100.0 * (alt.affected_count - base.affected_count) / base.affected_count
    elif alt.affected_count == 0:
        affected_increase = 0.0
    else:
        affected_increase = None

    if alt.total_impact > 0.0:
        impact_reduction = 100.0 * (alt.total_impact - base.total_impact) / alt.total_impact
    else:
        impact_reduction = 0.0

    return ComparisonReport(
        baseline=base,
        alternative=alt,
        affected_increase_pct=affected_increase,
        impact_reduction_pct=impact_reduction,
        threshold=scenario.affected_threshold,
    )


def _run_outcome(graph: SosGraph, scenario: Scenario, strategy: StrategySpec) -> StrategyOutcome:
    trace = run_scenario(scenario, graph, apply_strategy(strategy, graph))
    final = trace.final
    affected = affected_nodes(final, scenario.affected_threshold)
    return StrategyOutcome(
        strategy=strategy.name,
        affected_count=len(affected),
        total_impact=total_impact(final),
        trace=trace,
    )


@dataclass(frozen=True)
class RankedNode:
    node: str
    weighted_degree: float
    betweenness: float
    is_articulation: bool

    def to_dict(self) -> dict:
        return {
            "node": self.node,
            "weighted_degree": self.weighted_degree,
            "betweenness": self.betweenness,
            "is_articulation": self.is_articulation,
        }


@dataclass(frozen=True)
class VulnerabilityRanking:
    """Nodes ordered by (articulation, betweenness, weighted degree, id)."""

    entries: tuple[RankedNode, ...]

    def to_list(self) -> list[dict]:
        return [e.to_dict() for e in self.entries]


def vulnerability_ranking(graph: SosGraph) -> VulnerabilityRanking:
    """Rank structural vulnerability: articulation points first, then higher
    betweenness, then higher weighted degree, ties broken by node id."""
    articulations = articulation_points(graph)
    betweenness = betweenness_centrality(graph)
    entries = [
        RankedNode(
            node=v,
            weighted_degree=weighted_degree(graph, v),
            betweenness=betweenness[v],
            is_articulation=v in articulations,
        )
        for v in graph.node_ids
    ]
    entries.sort(key=lambda r: (not r.is_articulation, -r.betweenness, -r.weighted_degree, r.node))
    return VulnerabilityRanking(entries=tuple(entries))


@dataclass(frozen=True)
class ContainmentReport:
    """Whether a node can be fully edge-disconnected without touching a
    mandatory link, with the incident edges split into removable/mandatory."""

    node: str
    feasible: bool
    removable: tuple[Edge, ...]
    mandatory: tuple[Edge, ...]

    def to_dict(self) -> dict:
        return {
            "node": self.node,
            "feasible": self.feasible,
            "removable": [{"a": e.a, "b": e.b, "weight": e.weight} for e in self.removable],
            "mandatory": [{"a": e.a, "b": e.b, "weight": e.weight} for e in self.mandatory],
        }


def containment_feasibility(
    graph: SosGraph,
    node: str,
    must_keep: Iterable[Edge | tuple[str, str]] = (),
) -> ContainmentReport:
    """Report whether ``node`` can be isolated by removing incident edges.

    ``must_keep`` entries are unordered endpoint pairs (or Edge objects);
    isolation is infeasible iff a must-keep link touches the node.  An
    already isolated node is feasible vacuously.
    """
    if node not in graph:
        raise UnknownNode(f"node {node!r} not in graph")
    keep: set[frozenset[str]] = set()
    for item in must_keep:
        if isinstance(item, Edge):
            keep.add(item.endpoints)
        else:
            a, b = item
            keep.add(frozenset((a, b)))
    incident = [e for e in graph.edges if node in e.endpoints]
    mandatory = tuple(e for e in incident if e.endpoints in keep)
    removable = tuple(e for e in incident if e.endpoints not in keep)
    return ContainmentReport(node=node, feasible=not mandatory, removable=removable, mandatory=mandatory)

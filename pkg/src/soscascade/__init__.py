"""Cascading-failure propagation and security-control analysis for
system-of-systems graphs.

The package models a station or constellation as an undirected weighted
graph, propagates failure impact through it with per-node attenuation from
security countermeasures, compares protection strategies, ranks structural
vulnerability, and renders SHALL-style security requirements from a
component/control catalog.
"""

from . import data, errors
from .analysis import (
    ComparisonReport,
    ContainmentReport,
    RankedNode,
    StrategyOutcome,
    VulnerabilityRanking,
    compare_strategies,
    containment_feasibility,
    vulnerability_ranking,
)
from .catalog import (
    AttackSurface,
    ComponentEntry,
    Countermeasure,
    RequirementStatement,
    SecurityCatalog,
    ThreatTechnique,
    controls_for,
    generate_requirement,
    load_catalog,
    parse_catalog,
    serialize_catalog,
)
from .graph import (
    Edge,
    NodeKind,
    NodeProfile,
    SosGraph,
    WeightConventionWarning,
    articulation_points,
    betweenness_centrality,
    build_graph,
    load_topology,
    neighbors,
    parse_topology,
    weighted_degree,
)
from .propagation import (
    DEFAULT_AFFECTED_THRESHOLD,
    DEFAULT_EPSILON,
    DEFAULT_MAX_STEPS,
    ImpactState,
    PropagationTrace,
    Scenario,
    affected_nodes,
    load_scenario,
    parse_scenario,
    propagate_step,
    propagate_step_unattenuated,
    run_scenario,
    total_impact,
    trace_to_csv,
    write_trace_csv,
)
from .strategy import (
    AlphaAssignment,
    StrategyRule,
    StrategySpec,
    apply_strategy,
    load_strategy,
    parse_strategy,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaAssignment",
    "AttackSurface",
    "ComparisonReport",
    "ComponentEntry",
    "ContainmentReport",
    "Countermeasure",
    "DEFAULT_AFFECTED_THRESHOLD",
    "DEFAULT_EPSILON",
    "DEFAULT_MAX_STEPS",
    "Edge",
    "ImpactState",
    "NodeKind",
    "NodeProfile",
    "PropagationTrace",
    "RankedNode",
    "RequirementStatement",
    "Scenario",
    "SecurityCatalog",
    "SosGraph",
    "StrategyOutcome",
    "StrategyRule",
    "StrategySpec",
    "ThreatTechnique",
    "VulnerabilityRanking",
    "WeightConventionWarning",
    "affected_nodes",
    "apply_strategy",
    "articulation_points",
    "betweenness_centrality",
    "build_graph",
    "compare_strategies",
    "containment_feasibility",
    "controls_for",
    "data",
    "errors",
    "generate_requirement",
    "load_catalog",
    "load_scenario",
    "load_strategy",
    "load_topology",
    "neighbors",
    "parse_catalog",
    "parse_scenario",
    "parse_strategy",
    "parse_topology",
    "propagate_step",
    "propagate_step_unattenuated",
    "run_scenario",
    "serialize_catalog",
    "total_impact",
    "trace_to_csv",
    "vulnerability_ranking",
    "weighted_degree",
    "write_trace_csv",
]

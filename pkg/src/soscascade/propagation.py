"""Synchronous failure-impact propagation with per-node attenuation.

Every node carries an impact fraction I(v, t) in [0, 1].  One step updates
all nodes simultaneously from the time-t snapshot:

    unattenuated:  I(v, t+1) = max( I(v, t),  max_u  W_uv * I(u, t) )
    attenuated:    I(v, t+1) = max( I(v, t),  a_v * sum_u  W_uv * I(u, t) )

with u ranging over the neighbors of v and the result clamped to [0, 1].
The outer max keeps an affected node affected, so the iteration is
monotone and bounded and therefore converges; a run stops once the
max-norm step change drops below the scenario tolerance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

import numpy as np

from .errors import SchemaError, StateGraphMismatch, UnknownSource
from .graph import SosGraph
from .strategy import AlphaAssignment, StrategySpec, parse_strategy

DEFAULT_EPSILON = 1e-9
DEFAULT_MAX_STEPS = 1000
DEFAULT_AFFECTED_THRESHOLD = 0.05


@dataclass(frozen=True)
class ImpactState:
    """Impact fraction of every node at one time step."""

    t: int
    impact: Mapping[str, float]

    def __post_init__(self) -> None:
        if self.t < 0:
            raise ValueError("time step must be non-negative")
        bad = {v: x for v, x in self.impact.items() if not 0.0 <= x <= 1.0}
        if bad:
            raise ValueError(f"impact values outside [0, 1]: {bad}")
        object.__setattr__(self, "impact", dict(self.impact))

    @classmethod
    def initial(cls, graph: SosGraph, source: str, initial_impact: float) -> "ImpactState":
        """State at t=0: ``initial_impact`` at the source, 0 everywhere else."""
        if source not in graph:
            raise UnknownSource(f"source node {source!r} not in graph")
        return cls(0, {v: (float(initial_impact) if v == source else 0.0) for v in graph.node_ids})


@dataclass(frozen=True)
class Scenario:
    """One propagation run: seeded source, stopping rule, affected threshold."""

    source: str
    initial_impact: float
    strategy: StrategySpec | None = None
    epsilon: float = DEFAULT_EPSILON
    max_steps: int = DEFAULT_MAX_STEPS
    affected_threshold: float = DEFAULT_AFFECTED_THRESHOLD

    def __post_init__(self) -> None:
        if not isinstance(self.source, str) or not self.source:
            raise SchemaError("scenario: 'source' must be a non-empty string")
        if not _is_number(self.initial_impact) or not 0.0 < self.initial_impact <= 1.0:
            raise SchemaError("scenario: 'initial_impact' must be a number in (0, 1]")
        if not _is_number(self.epsilon) or self.epsilon <= 0.0:
            raise SchemaError("scenario: 'epsilon' must be a positive number")
        if isinstance(self.max_steps, bool) or not isinstance(self.max_steps, int) or self.max_steps < 1:
            raise SchemaError("scenario: 'max_steps' must be a positive integer")
        if not _is_number(self.affected_threshold) or not 0.0 < self.affected_threshold < 1.0:
            raise SchemaError("scenario: 'affected_threshold' must be a number in (0, 1)")


@dataclass(frozen=True)
class PropagationTrace:
    """All states from t=0 through termination of one run."""

    states: tuple[ImpactState, ...]
    converged: bool
    steps_taken: int

    @property
    def final(self) -> ImpactState:
        return self.states[-1]


def _is_number(x: object) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _check_cover(mapping: Mapping[str, float], graph: SosGraph, what: str) -> None:
    extra = set(mapping) - set(graph.node_ids)
    if extra:
        raise StateGraphMismatch(f"{what} has entries for unknown nodes {sorted(extra)}")


def _vector(mapping: Mapping[str, float], graph: SosGraph, what: str) -> np.ndarray:
    try:
        return np.array([mapping[v] for v in graph.node_ids], dtype=float)
    except KeyError as exc:
        raise StateGraphMismatch(f"{what} missing entry for node {exc.args[0]!r}") from exc


def _step_vector(vec: np.ndarray, graph: SosGraph, alpha_vec: np.ndarray | None) -> np.ndarray:
    w = graph.weight_matrix
    if alpha_vec is None:
        incoming = (w * vec[np.newaxis, :]).max(axis=1)
    else:
        incoming = alpha_vec * (w @ vec)
    return np.minimum(1.0, np.maximum(vec, incoming))


def _as_state(t: int, vec: np.ndarray, graph: SosGraph) -> ImpactState:
    return ImpactState(t, dict(zip(graph.node_ids, vec.tolist())))


def propagate_step_unattenuated(state: ImpactState, graph: SosGraph) -> ImpactState:
    """One synchronous step where each node takes its strongest single
    neighbor transfer W_uv * I(u, t); no diffusion factor is applied."""
    _check_cover(state.impact, graph, "impact state")
    vec = _vector(state.impact, graph, "impact state")
    return _as_state(state.t + 1, _step_vector(vec, graph, None), graph)


def propagate_step(state: ImpactState, graph: SosGraph, alphas: AlphaAssignment) -> ImpactState:
    """One synchronous step of the attenuated rule: the weighted neighbor sum
    is scaled by the receiving node's diffusion factor."""
    _check_cover(state.impact, graph, "impact state")
    _check_cover(alphas.alpha, graph, "alpha assignment")
    vec = _vector(state.impact, graph, "impact state")
    avec = _vector(alphas.alpha, graph, "alpha assignment")
    return _as_state(state.t + 1, _step_vector(vec, graph, avec), graph)


def run_scenario(scenario: Scenario, graph: SosGraph, alphas: AlphaAssignment) -> PropagationTrace:
    """Iterate the attenuated step from the seeded source until the max-norm
    change drops below ``scenario.epsilon`` or ``scenario.max_steps`` is hit.

    Every intermediate state is recorded; ``converged`` is True iff the
    tolerance was met.  The run is deterministic.
    """
    if scenario.source not in graph:
        raise UnknownSource(f"source node {scenario.source!r} not in graph")
    _check_cover(alphas.alpha, graph, "alpha assignment")
    avec = _vector(alphas.alpha, graph, "alpha assignment")

    vec = np.zeros(len(graph))
    vec[graph.index_of[scenario.source]] = scenario.initial_impact
    states = [_as_state(0, vec, graph)]
    converged = False
    for t in range(1, scenario.max_steps + 1):
        new = _step_vector(vec, graph, avec)
        delta = float(np.max(np.abs(new - vec)))
        states.append(_as_state(t, new, graph))
        vec = new
        if delta < scenario.epsilon:
            converged = True
            break
    return PropagationTrace(states=tuple(states), converged=converged, steps_taken=len(states) - 1)


def affected_nodes(state: ImpactState, threshold: float) -> set[str]:
    """Nodes whose impact is at or above ``threshold`` (exclusive bounds 0 and 1)."""
    if not _is_number(threshold) or not 0.0 < threshold < 1.0:
        raise ValueError(f"threshold must lie in (0, 1), got {threshold!r}")
    return {v for v, x in state.impact.items() if x >= threshold}


def total_impact(state: ImpactState) -> float:
    """Sum of all node impacts, accumulated in node-id order for determinism."""
    return float(sum(state.impact[v] for v in sorted(state.impact)))


# --- trace output ------------------------------------------------------------


def trace_to_csv(trace: PropagationTrace) -> str:
    """Render a trace as CSV: header ``t,node_id,impact``, one row per node per
    step, impacts with 9 decimal digits, rows sorted by (t, node_id)."""
    lines = ["t,node_id,impact"]
    for state in trace.states:
        for v in sorted(state.impact):
            lines.append(f"{state.t},{v},{state.impact[v]:.9f}")
    return "\n".join(lines) + "\n"


def write_trace_csv(trace: PropagationTrace, path: str | Path) -> None:
    Path(path).write_text(trace_to_csv(trace), encoding="utf-8")


# --- scenario files ----------------------------------------------------------

_SCENARIO_KEYS = frozenset(
    {"source", "initial_impact", "strategy", "epsilon", "max_steps", "affected_threshold"}
)


def parse_scenario(doc: object) -> Scenario:
    """Scenario from a JSON document; omitted keys take the documented defaults.

    ``strategy`` may hold an inline strategy object; command-line strategy
    files take precedence over it.
    """
    if not isinstance(doc, dict):
        raise SchemaError("scenario document must be a JSON object")
    unknown = set(doc) - _SCENARIO_KEYS
    if unknown:
        raise SchemaError(f"scenario: unknown keys {sorted(unknown)}")
    if "source" not in doc:
        raise SchemaError("scenario: missing key 'source'")
    strategy = None
    if doc.get("strategy") is not None:
        strategy = parse_strategy(doc["strategy"])
    return Scenario(
        source=doc["source"],
        initial_impact=doc.get("initial_impact", 1.0),
        strategy=strategy,
        epsilon=doc.get("epsilon", DEFAULT_EPSILON),
        max_steps=doc.get("max_steps", DEFAULT_MAX_STEPS),
        affected_threshold=doc.get("affected_threshold", DEFAULT_AFFECTED_THRESHOLD),
    )


def load_scenario(path: str | Path) -> Scenario:
    """Read and validate a scenario JSON file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    return parse_scenario(doc)

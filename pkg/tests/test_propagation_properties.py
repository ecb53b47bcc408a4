"""Model-level properties that do not depend on any fixture numbers."""

import random

import pytest

from soscascade import (
    AlphaAssignment,
    ImpactState,
    Scenario,
    build_graph,
    NodeProfile,
    propagate_step,
    propagate_step_unattenuated,
    run_scenario,
)

import util_graphs


def test_reduction_to_unattenuated_on_unit_impact_paths():
    # With a full initial impact, unit weights, and alpha 1 on a path the
    # attenuated and unattenuated rules coincide step by step: every value
    # is 0 or 1, so the neighbor sum clamps to the neighbor max.  (With a
    # fractional seed they genuinely differ: neighbor echoes add up.)
    rng = random.Random(77)
    for _ in range(50):
        n = rng.randint(2, 10)
        ids = util_graphs.node_names(n)
        g = build_graph([NodeProfile(v) for v in ids], [(a, b, 1.0) for a, b in zip(ids, ids[1:])])
        alphas = AlphaAssignment.uniform(g, 1.0)
        state_sum = ImpactState.initial(g, rng.choice(ids), 1.0)
        state_max = state_sum
        for _ in range(n + 2):
            state_sum = propagate_step(state_sum, g, alphas)
            state_max = propagate_step_unattenuated(state_max, g)
            assert state_sum.impact == state_max.impact


def test_attenuated_exceeds_unattenuated_on_fractional_path():
    # counterexample pinning the restriction above to unit initial impact
    ids = ["A", "B", "C"]
    g = build_graph([NodeProfile(v) for v in ids], [("A", "B", 1.0), ("B", "C", 1.0)])
    alphas = AlphaAssignment.uniform(g, 1.0)
    state_sum = ImpactState.initial(g, "A", 0.4)
    state_max = state_sum
    for _ in range(4):
        state_sum = propagate_step(state_sum, g, alphas)
        state_max = propagate_step_unattenuated(state_max, g)
    assert state_max.impact["B"] == pytest.approx(0.4, abs=1e-15)
    assert state_sum.impact["B"] > state_max.impact["B"]


def test_convergence_is_guaranteed_with_positive_epsilon():
    rng = random.Random(99)
    for _ in range(50):
        nodes, edges, g = util_graphs.random_case(rng, max_nodes=8)
        trace = run_scenario(
            Scenario(source=rng.choice(nodes), initial_impact=rng.uniform(0.1, 1.0)),
            g,
            AlphaAssignment(util_graphs.random_alpha(rng, nodes)),
        )
        assert trace.converged
        assert trace.steps_taken <= 1000


def test_trace_starts_at_seeded_state():
    nodes, edges, g = util_graphs.random_case(random.Random(5), max_nodes=6)
    source = nodes[0]
    trace = run_scenario(
        Scenario(source=source, initial_impact=0.25), g, AlphaAssignment.uniform(g, 0.5)
    )
    first = trace.states[0]
    assert first.t == 0
    assert first.impact[source] == 0.25
    assert all(x == 0.0 for v, x in first.impact.items() if v != source)

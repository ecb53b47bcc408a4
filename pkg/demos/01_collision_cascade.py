"""Walkthrough: a collision fault on the robotic arm cascading through the station.

Loads the shipped 14-system topology, seeds a 33% impact at the arm, and
propagates it under the uniform baseline protection (diffusion factor 0.3
everywhere).  Prints the wavefront over the first steps and the converged
affected set.
"""

from soscascade import (
    AlphaAssignment,
    Scenario,
    affected_nodes,
    load_topology,
    neighbors,
    run_scenario,
    total_impact,
)
from soscascade import data as shipped

# ---------------------------------------------------------------------------
# The graph: core habitation modules, auxiliary/power systems, docking ports.
# Fixed structural links weigh 1.0; the arm's robotic interaction with the
# habitation hub is an auxiliary dependency at 0.5.
# ---------------------------------------------------------------------------
graph = load_topology(shipped.default_topology_path())
print(f"systems: {len(graph)}, links: {len(graph.edges)}")
print("the arm touches:", sorted(neighbors(graph, "canadarm3")))

# ---------------------------------------------------------------------------
# Scenario: without AI-based avoidance the collision probability is 33%,
# so the arm starts at impact 0.33 and everything else at 0.
# ---------------------------------------------------------------------------
scenario = Scenario(source="canadarm3", initial_impact=0.33)
alphas = AlphaAssignment.uniform(graph, 0.3)
trace = run_scenario(scenario, graph, alphas)
print(f"\nconverged: {trace.converged} after {trace.steps_taken} steps")

# Show how the hub and its neighbors pick up impact over the early steps.
watch = ["canadarm3", "halo", "ppe", "i_hab", "esprit_erm"]
print("\n t  " + "".join(f"{v:>12s}" for v in watch))
for state in trace.states[:8]:
    row = "".join(f"{state.impact[v]:12.6f}" for v in watch)
    print(f"{state.t:2d}  {row}")

# ---------------------------------------------------------------------------
# Converged picture: who ends up affected at the 5% threshold?
# ---------------------------------------------------------------------------
final = trace.final
affected = sorted(affected_nodes(final, scenario.affected_threshold))
print(f"\naffected at threshold {scenario.affected_threshold}: {affected}")
print(f"total converged impact: {total_impact(final):.4f}")
print("\nper-system impact:")
for v in sorted(final.impact, key=final.impact.get, reverse=True):
    bar = "#" * round(40 * final.impact[v])
    print(f"  {v:22s} {final.impact[v]:8.4f} {bar}")

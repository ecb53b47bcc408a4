"""Walkthrough: which systems does the station structurally depend on?

Ranks nodes by articulation status, betweenness, and weighted degree, then
checks whether the most vulnerable one could be isolated in a contingency.
"""

from soscascade import containment_feasibility, load_topology, vulnerability_ranking
from soscascade import data as shipped

graph = load_topology(shipped.default_topology_path())

ranking = vulnerability_ranking(graph)
print("rank  node                   art.  betweenness  w-degree")
for i, entry in enumerate(ranking.entries, start=1):
    flag = "yes" if entry.is_articulation else "no "
    print(f"{i:4d}  {entry.node:22s} {flag}   {entry.betweenness:10.4f}  {entry.weighted_degree:7.1f}")

top = ranking.entries[0].node
print(f"\nmost vulnerable: {top}")

# ---------------------------------------------------------------------------
# Containment check: the habitation hub cannot be sectioned off because the
# power-and-propulsion link must stay up for crew safety and station keeping.
# ---------------------------------------------------------------------------
report = containment_feasibility(graph, top, must_keep={(top, "ppe")})
print(f"\ncan {top} be fully disconnected? {'yes' if report.feasible else 'no'}")
print("mandatory links:", [(e.a, e.b) for e in report.mandatory])
print("removable links:", [(e.a, e.b) for e in report.removable])

# A leaf system, by contrast, can be cut loose entirely.
leaf = containment_feasibility(graph, "solar_arrays")
print(f"\ncan solar_arrays be fully disconnected? {'yes' if leaf.feasible else 'no'} "
      f"(removing {len(leaf.removable)} link)")

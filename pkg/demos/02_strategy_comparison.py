"""Walkthrough: uniform baseline protection versus habitation-only protection.

Runs the collision scenario under both strategies and reports the two
headline metrics, then sweeps the protected diffusion factor to show how
the gap behaves across the attenuation range.
"""

from dataclasses import replace

from soscascade import (
    Scenario,
    StrategyRule,
    StrategySpec,
    compare_strategies,
    load_topology,
)
from soscascade import data as shipped

graph = load_topology(shipped.default_topology_path())
scenario = Scenario(source="canadarm3", initial_impact=0.33)

# Uniform baseline: every system gets the protected factor.  Habitation-only
# protects the three core modules and leaves the rest unattenuated.
baseline = StrategySpec("uniform-baseline", StrategyRule.UNIFORM_BASELINE, 0.3, 1.0)
habitation = StrategySpec("habitation-only", StrategyRule.HABITATION_ONLY, 0.3, 1.0)

report = compare_strategies(graph, scenario, baseline, habitation)
for outcome in (report.baseline, report.alternative):
    print(f"{outcome.strategy:18s} affected={outcome.affected_count:2d}  "
          f"total impact={outcome.total_impact:7.3f}  steps={outcome.trace.steps_taken}")

print(f"\naffected-node increase (habitation-only vs baseline): "
      f"{report.affected_increase_pct:.0f}%")
print(f"impact reduction achieved by the baseline: {report.impact_reduction_pct:.1f}%")

# ---------------------------------------------------------------------------
# Sweep the protected factor.  Even well below 0.5 the habitation-only
# strategy leaves the unprotected majority free to relay the failure.
# ---------------------------------------------------------------------------
print("\nalpha   base-affected  hab-affected   increase")
for k in range(1, 10):
    alpha = k / 10
    swept = compare_strategies(
        graph,
        scenario,
        replace(baseline, protected_alpha=alpha),
        replace(habitation, protected_alpha=alpha),
    )
    inc = swept.affected_increase_pct
    inc_text = f"{inc:7.0f}%" if inc is not None else "    n/a"
    print(f" {alpha:.1f}    {swept.baseline.affected_count:10d} "
          f"{swept.alternative.affected_count:13d} {inc_text}")

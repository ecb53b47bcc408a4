"""Walkthrough: from the component security catalog to SHALL-style requirements.

Shows the catalog's component rows (attack surfaces, threats, controls),
filters the controls that are critical per system, and renders requirement
statements for them.
"""

from soscascade import controls_for, generate_requirement, load_catalog
from soscascade import data as shipped

catalog = load_catalog(shipped.default_catalog_path())

# ---------------------------------------------------------------------------
# The component rows: what each one exposes and which techniques threaten it.
# ---------------------------------------------------------------------------
for entry in catalog.components:
    print(f"== {entry.component}")
    print(f"   input:      {entry.attack_surface.input}")
    print(f"   output:     {entry.attack_surface.output}")
    print(f"   dependency: {entry.attack_surface.dependency}")
    threats = ", ".join(f"{t} {catalog.threat_by_id[t].name}" for t in entry.threats)
    print(f"   threats:    {threats}")
    tagged = []
    for cid in entry.controls:
        cm = catalog.countermeasure_by_id[cid]
        marks = "".join("*" if s == "OMCV" else "+" for s in sorted(cm.critical_for))
        tagged.append(f"{marks}{cid}")
    print(f"   controls:   {' '.join(tagged)}   (*critical for OMCV, +critical for PPE)")

# ---------------------------------------------------------------------------
# Requirements for the crewed vehicle: its critical onboard-computer controls.
# ---------------------------------------------------------------------------
print("\ncrewed-vehicle requirements (Onboard Computer):")
for cm in controls_for(catalog, "Onboard Computer", "OMCV"):
    print(" ", generate_requirement("OBC", cm, cm.rationale).text)

# Requirements for the power element: encrypted links on the storage path.
print("\npower-element requirements:")
transec = catalog.countermeasure_by_id["CM0029"]
print(" ", generate_requirement("Data processing/Storage", transec, transec.rationale).text)
for cm in controls_for(catalog, "Data Processing/Storage", "PPE"):
    print(" ", generate_requirement("Data processing/Storage", cm, cm.rationale).text)

# Integration-wide and crewed-module controls complement the per-component set.
print("\nshared-operation and crewed-module controls:")
for cm in catalog.countermeasures:
    if cm.scope != "component":
        print(f"  [{cm.scope}] {cm.id} {cm.name}")

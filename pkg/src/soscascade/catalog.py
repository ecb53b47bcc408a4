"""Security catalog: components, attack surfaces, threat techniques, countermeasures.

The shipped catalog covers the command-and-data-handling subsystem and its
error-correction components, the threat techniques on their attack surfaces,
and the security controls that counter them.  Controls critical for a
specific system carry that system's tag (OMCV or PPE); integration-wide and
crewed-module controls are marked by their scope.  The module also renders
SHALL-style security requirements from (component, control) pairs.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Mapping

from .errors import InvalidControlId, InvalidThreatId, SchemaError, UnknownComponent

CONTROL_ID_PATTERN = re.compile(r"CM\d{4}\Z")
THREAT_ID_PATTERN = re.compile(r"(?:EX|EXF|EEX)-\d{4}\Z")

SYSTEM_TAGS = frozenset({"OMCV", "PPE"})
CONTROL_SCOPES = ("component", "integration", "crewed")


@dataclass(frozen=True)
class ThreatTechnique:
    """An attack technique, e.g. EX-0016 Jamming."""

    id: str
    name: str

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not THREAT_ID_PATTERN.match(self.id):
            raise InvalidThreatId(f"threat id {self.id!r} does not match EX-/EXF-/EEX-NNNN")
        if not isinstance(self.name, str) or not self.name:
            raise SchemaError(f"threat {self.id}: name must be a non-empty string")


@dataclass(frozen=True)
class Countermeasure:
    """A security control, e.g. CM0038 Segmentation.

    ``critical_for`` tags the systems for which the control is critical;
    ``scope`` distinguishes per-component controls from integration-wide
    and crewed-module ones.  ``rationale`` is the default clause used when
    rendering a requirement for this control.
    """

    id: str
    name: str
    critical_for: frozenset[str] = frozenset()
    scope: str = "component"
    rationale: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not CONTROL_ID_PATTERN.match(self.id):
            raise InvalidControlId(f"control id {self.id!r} does not match CMNNNN")
        if not isinstance(self.name, str) or not self.name:
            raise SchemaError(f"control {self.id}: name must be a non-empty string")
        tags = frozenset(self.critical_for)
        bad = tags - SYSTEM_TAGS
        if bad:
            raise SchemaError(f"control {self.id}: unknown system tags {sorted(bad)}")
        object.__setattr__(self, "critical_for", tags)
        if self.scope not in CONTROL_SCOPES:
            raise SchemaError(f"control {self.id}: scope must be one of {CONTROL_SCOPES}")


@dataclass(frozen=True)
class AttackSurface:
    """Input/output/dependency perimeter of a component."""

    input: str
    output: str
    dependency: str


@dataclass(frozen=True)
class ComponentEntry:
    """One analyzed component with its error-correction associations,
    attack surface, threat techniques, and security controls."""

    component: str
    ecc_associations: tuple[str, ...]
    attack_surface: AttackSurface
    threats: tuple[str, ...]
    controls: tuple[str, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.component, str) or not self.component:
            raise SchemaError("component name must be a non-empty string")
        object.__setattr__(self, "ecc_associations", tuple(self.ecc_associations))
        object.__setattr__(self, "threats", tuple(self.threats))
        object.__setattr__(self, "controls", tuple(self.controls))


@dataclass(frozen=True)
class SecurityCatalog:
    """Immutable catalog; every id referenced by a component must resolve."""

    countermeasures: tuple[Countermeasure, ...]
    threats: tuple[ThreatTechnique, ...]
    components: tuple[ComponentEntry, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "countermeasures", tuple(self.countermeasures))
        object.__setattr__(self, "threats", tuple(self.threats))
        object.__setattr__(self, "components", tuple(self.components))
        for label, ids in (
            ("countermeasure", [c.id for c in self.countermeasures]),
            ("threat", [t.id for t in self.threats]),
            ("component", [c.component for c in self.components]),
        ):
            dupes = {i for i in ids if ids.count(i) > 1}
            if dupes:
                raise SchemaError(f"duplicate {label} ids: {sorted(dupes)}")
        known_controls = {c.id for c in self.countermeasures}
        known_threats = {t.id for t in self.threats}
        for entry in self.components:
            for cid in entry.controls:
                if cid not in known_controls:
                    raise SchemaError(f"component {entry.component!r}: undefined control {cid}")
            for tid in entry.threats:
                if tid not in known_threats:
                    raise SchemaError(f"component {entry.component!r}: undefined threat {tid}")

    @cached_property
    def countermeasure_by_id(self) -> Mapping[str, Countermeasure]:
        return {c.id: c for c in self.countermeasures}

    @cached_property
    def threat_by_id(self) -> Mapping[str, ThreatTechnique]:
        return {t.id: t for t in self.threats}

    def find_component(self, name: str) -> ComponentEntry | None:
        """Case-insensitive component lookup (source documents vary in casing)."""
        lowered = name.lower()
        for entry in self.components:
            if entry.component.lower() == lowered:
                return entry
        return None


def controls_for(
    catalog: SecurityCatalog, component: str, system: str | None = None
) -> list[Countermeasure]:
    """Controls listed for ``component``, in catalog order.

    With a ``system`` tag, only the controls critical for that system are
    returned.
    """
    entry = catalog.find_component(component)
    if entry is None:
        raise UnknownComponent(f"component {component!r} not in catalog")
    controls = [catalog.countermeasure_by_id[cid] for cid in entry.controls]
    if system is None:
        return controls
    if system not in SYSTEM_TAGS:
        raise SchemaError(f"unknown system tag {system!r}; expected one of {sorted(SYSTEM_TAGS)}")
    return [cm for cm in controls if system in cm.critical_for]


@dataclass(frozen=True)
class RequirementStatement:
    """A rendered SHALL-style security requirement."""

    subject: str
    control_id: str
    control_name: str
    text: str


def generate_requirement(
    component: str, control: Countermeasure, rationale_clause: str
) -> RequirementStatement:
    """Render ``<component> SHALL implement <name> (<id>) to <clause>.``

    Output is deterministic and byte-stable for fixed inputs; the subject
    string is used exactly as given.
    """
    text = f"{component} SHALL implement {control.name} ({control.id}) to {rationale_clause}."
    return RequirementStatement(
        subject=component, control_id=control.id, control_name=control.name, text=text
    )


# --- catalog files -----------------------------------------------------------

_CATALOG_KEYS = frozenset({"countermeasures", "threats", "components"})
_CM_KEYS = frozenset({"id", "name", "critical_for", "scope", "rationale"})
_THREAT_KEYS = frozenset({"id", "name"})
_COMPONENT_KEYS = frozenset({"component", "ecc_associations", "attack_surface", "threats", "controls"})
_SURFACE_KEYS = frozenset({"input", "output", "dependency"})


def parse_catalog(doc: object) -> SecurityCatalog:
    """Catalog from a JSON document; see the README for the schema."""
    if not isinstance(doc, dict):
        raise SchemaError("catalog document must be a JSON object")
    _check_keys("catalog", doc, _CATALOG_KEYS, _CATALOG_KEYS)

    countermeasures = []
    for item in _objects(doc["countermeasures"], "catalog countermeasures"):
        _check_keys("countermeasure", item, _CM_KEYS, frozenset({"id", "name", "critical_for", "scope"}))
        countermeasures.append(
            Countermeasure(
                id=item["id"],
                name=item["name"],
                critical_for=frozenset(item["critical_for"]),
                scope=item["scope"],
                rationale=item.get("rationale", ""),
            )
        )

    threats = []
    for item in _objects(doc["threats"], "catalog threats"):
        _check_keys("threat", item, _THREAT_KEYS, _THREAT_KEYS)
        threats.append(ThreatTechnique(id=item["id"], name=item["name"]))

    components = []
    for item in _objects(doc["components"], "catalog components"):
        _check_keys("component", item, _COMPONENT_KEYS, _COMPONENT_KEYS)
        surface = item["attack_surface"]
        if not isinstance(surface, dict):
            raise SchemaError(f"component {item.get('component')!r}: attack_surface must be an object")
        _check_keys("attack_surface", surface, _SURFACE_KEYS, _SURFACE_KEYS)
        components.append(
            ComponentEntry(
                component=item["component"],
                ecc_associations=tuple(item["ecc_associations"]),
                attack_surface=AttackSurface(
                    input=surface["input"], output=surface["output"], dependency=surface["dependency"]
                ),
                threats=tuple(item["threats"]),
                controls=tuple(item["controls"]),
            )
        )

    return SecurityCatalog(
        countermeasures=tuple(countermeasures), threats=tuple(threats), components=tuple(components)
    )


def load_catalog(path: str | Path) -> SecurityCatalog:
    """Read and validate a catalog JSON file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    return parse_catalog(doc)


def serialize_catalog(catalog: SecurityCatalog) -> str:
    """Canonical JSON form of a catalog.

    Loading a canonical file and serializing it again reproduces the file
    byte for byte: entry order is preserved, system tags are sorted, and
    every key is always emitted.
    """
    doc = {
        "countermeasures": [
            {
                "id": cm.id,
                "name": cm.name,
                "critical_for": sorted(cm.critical_for),
                "scope": cm.scope,
                "rationale": cm.rationale,
            }
            for cm in catalog.countermeasures
        ],
        "threats": [{"id": t.id, "name": t.name} for t in catalog.threats],
        "components": [
            {
                "component": c.component,
                "ecc_associations": list(c.ecc_associations),
                "attack_surface": {
                    "input": c.attack_surface.input,
                    "output": c.attack_surface.output,
                    "dependency": c.attack_surface.dependency,
                },
                "threats": list(c.threats),
                "controls": list(c.controls),
            }
            for c in catalog.components
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _objects(value: object, what: str) -> list[dict]:
    if not isinstance(value, list) or not all(isinstance(x, dict) for x in value):
        raise SchemaError(f"{what} must be an array of objects")
    return value


def _check_keys(what: str, obj: Mapping[str, object], allowed: frozenset[str], required: frozenset[str]) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise SchemaError(f"{what}: unknown keys {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise SchemaError(f"{what}: missing keys {sorted(missing)}")

"""Exception hierarchy shared by the graph, propagation, catalog, and CLI layers."""


class SosCascadeError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SosCascadeError):
    """Invalid input: malformed document, bad graph element, or broken precondition."""


class EmptyGraph(ValidationError):
    """Graph construction needs at least one node profile."""


class DuplicateNode(ValidationError):
    """A node id appears more than once."""


class DuplicateEdge(ValidationError):
    """More than one edge given for the same unordered node pair."""


class SelfLoop(ValidationError):
    """Edge endpoints must be distinct."""


class DanglingEdge(ValidationError):
    """Edge endpoint has no matching node profile."""


class InvalidWeight(ValidationError):
    """Edge weight outside the accepted range (0, 1]."""


class UnknownNode(ValidationError):
    """Referenced node id is not part of the graph."""


class UnknownSource(ValidationError):
    """Scenario source node is not part of the graph."""


class StateGraphMismatch(ValidationError):
    """Impact state or alpha assignment does not cover the graph's node set."""


class SchemaError(ValidationError):
    """Document content does not match the expected schema."""


class InvalidControlId(SchemaError):
    """Countermeasure id does not match the CMxxxx pattern."""


class InvalidThreatId(SchemaError):
    """Threat technique id does not match the EX-/EXF-/EEX- pattern."""


class UnknownComponent(ValidationError):
    """Component name not present in the security catalog."""


class MissingKindMetadata(ValidationError):
    """Strategy needs node-kind metadata that the graph does not carry."""

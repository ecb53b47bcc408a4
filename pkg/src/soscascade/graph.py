"""Undirected weighted graph model of interconnected systems.

A graph couples a set of node profiles with undirected weighted edges.
By convention fixed structural links carry weight 1.0 and auxiliary
dependencies carry weight 0.5; the engine itself accepts any weight in
(0, 1].  Graphs are immutable after construction and safe to share across
concurrent readers; every operation here is a pure function of its inputs.
"""

from __future__ import annotations

import json
import warnings
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    DanglingEdge,
    DuplicateEdge,
    DuplicateNode,
    EmptyGraph,
    InvalidWeight,
    SchemaError,
    SelfLoop,
    UnknownNode,
)

#: The two weight classes used by curated topologies: fixed structural
#: links (1.0) and auxiliary dependencies (0.5).
STANDARD_WEIGHTS = (1.0, 0.5)


class WeightConventionWarning(UserWarning):
    """A topology file uses a weight outside the two standard link classes."""


class NodeKind(Enum):
    """Role category of a system; protection strategies key off this."""

    CORE = "core"
    AUXILIARY_POWER = "auxiliary_power"
    DOCKING = "docking"


@dataclass(frozen=True)
class NodeProfile:
    """A system taking part in the graph.

    ``kind`` may be None for ad-hoc graphs built in code; topology files
    always carry it, and kind-sensitive strategies require it.
    """

    id: str
    kind: NodeKind | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise SchemaError("node id must be a non-empty string")
        if self.kind is not None and not isinstance(self.kind, NodeKind):
            raise SchemaError(f"node {self.id!r}: kind must be a NodeKind, got {self.kind!r}")


@dataclass(frozen=True)
class Edge:
    """Undirected link between two distinct systems, weight in (0, 1].

    Endpoints are stored in lexicographic order so equal edges compare
    equal regardless of construction order.
    """

    a: str
    b: str
    weight: float

    def __post_init__(self) -> None:
        if not (isinstance(self.a, str) and self.a and isinstance(self.b, str) and self.b):
            raise SchemaError(f"edge endpoints must be non-empty strings, got {self.a!r}-{self.b!r}")
        if self.a == self.b:
            raise SelfLoop(f"self-loop on node {self.a!r}")
        if isinstance(self.weight, bool) or not isinstance(self.weight, (int, float)):
            raise InvalidWeight(f"edge {self.a!r}-{self.b!r}: weight must be a number, got {self.weight!r}")
        w = float(self.weight)
        if not 0.0 < w <= 1.0:  # also rejects NaN
            raise InvalidWeight(f"edge {self.a!r}-{self.b!r}: weight {self.weight!r} outside (0, 1]")
        a, b = self.a, self.b
        if b < a:
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)
        object.__setattr__(self, "weight", w)

    @property
    def endpoints(self) -> frozenset[str]:
        return frozenset((self.a, self.b))


@dataclass(frozen=True)
class SosGraph:
    """Validated immutable graph over node profiles; build via :func:`build_graph`."""

    profiles: tuple[NodeProfile, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def node_ids(self) -> tuple[str, ...]:
        """Node ids in lexicographic order; fixes the index used by vector code."""
        return tuple(p.id for p in self.profiles)

    @cached_property
    def profile_of(self) -> Mapping[str, NodeProfile]:
        return {p.id: p for p in self.profiles}

    @cached_property
    def index_of(self) -> Mapping[str, int]:
        return {v: i for i, v in enumerate(self.node_ids)}

    @cached_property
    def adjacency(self) -> Mapping[str, Mapping[str, float]]:
        """Symmetric neighbor map: node id -> {neighbor id: edge weight}."""
        adj: dict[str, dict[str, float]] = {v: {} for v in self.node_ids}
        for e in self.edges:
            adj[e.a][e.b] = e.weight
            adj[e.b][e.a] = e.weight
        return adj

    @cached_property
    def weight_matrix(self) -> np.ndarray:
        """Symmetric weight matrix in node_ids order; 0 marks absent edges."""
        n = len(self.node_ids)
        w = np.zeros((n, n))
        idx = self.index_of
        for e in self.edges:
            w[idx[e.a], idx[e.b]] = e.weight
            w[idx[e.b], idx[e.a]] = e.weight
        w.flags.writeable = False
        return w

    def __contains__(self, node_id: object) -> bool:
        return node_id in self.index_of

    def __len__(self) -> int:
        return len(self.profiles)


def build_graph(
    profiles: Iterable[NodeProfile],
    edges: Iterable[Edge | tuple[str, str, float]] = (),
) -> SosGraph:
    """Validate and assemble an immutable graph.

    Rejects duplicate nodes, duplicate edges, self-loops, dangling endpoints,
    and weights outside (0, 1].  Edges may be given as ``Edge`` objects or
    ``(a, b, weight)`` triples.
    """
    profile_list = tuple(profiles)
    if not profile_list:
        raise EmptyGraph("a graph needs at least one node profile")
    seen: set[str] = set()
    for p in profile_list:
        if p.id in seen:
            raise DuplicateNode(f"duplicate node id {p.id!r}")
        seen.add(p.id)

    normalized: list[Edge] = []
    pairs: set[frozenset[str]] = set()
    for item in edges:
        edge = item if isinstance(item, Edge) else Edge(*item)
        for end in (edge.a, edge.b):
            if end not in seen:
                raise DanglingEdge(f"edge {edge.a!r}-{edge.b!r}: endpoint {end!r} has no node profile")
        if edge.endpoints in pairs:
            raise DuplicateEdge(f"more than one edge between {edge.a!r} and {edge.b!r}")
        pairs.add(edge.endpoints)
        normalized.append(edge)

    return SosGraph(
        profiles=tuple(sorted(profile_list, key=lambda p: p.id)),
        edges=tuple(sorted(normalized, key=lambda e: (e.a, e.b))),
    )


def _require_node(graph: SosGraph, v: str) -> None:
    if v not in graph:
        raise UnknownNode(f"node {v!r} not in graph")


def neighbors(graph: SosGraph, v: str) -> set[tuple[str, float]]:
    """Adjacent nodes of ``v`` with their edge weights; empty set if isolated."""
    _require_node(graph, v)
    return {(u, w) for u, w in graph.adjacency[v].items()}


def weighted_degree(graph: SosGraph, v: str) -> float:
    """Sum of the weights of all edges incident to ``v``."""
    _require_node(graph, v)
    adj = graph.adjacency[v]
    return float(sum(adj[u] for u in sorted(adj)))


def articulation_points(graph: SosGraph) -> set[str]:
    """Nodes whose removal increases the number of connected components.

    Edge weights are ignored.  Computed per connected component with an
    iterative low-link DFS, so deep graphs cannot hit the recursion limit.
    """
    adj = {v: sorted(graph.adjacency[v]) for v in graph.node_ids}
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    result: set[str] = set()
    timer = 0

    for root in graph.node_ids:
        if root in disc:
            continue
        parent[root] = None
        root_children = 0
        timer += 1
        disc[root] = low[root] = timer
        stack: list[tuple[str, Iterable[str]]] = [(root, iter(adj[root]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent[v]:
                    continue
                if u in disc:
                    low[v] = min(low[v], disc[u])
                else:
                    parent[u] = v
                    timer += 1
                    disc[u] = low[u] = timer
                    if v == root:
                        root_children += 1
                    stack.append((u, iter(adj[u])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                p = parent[v]
                if p is not None:
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        result.add(p)
        if root_children >= 2:
            result.add(root)
    return result


def betweenness_centrality(graph: SosGraph) -> dict[str, float]:
    """Shortest-path betweenness on the unweighted skeleton, scaled to [0, 1].

    Uses Brandes' dependency accumulation with BFS from every source and
    divides by the (n-1)(n-2)/2 node pairs of the whole graph.  The
    accumulation runs in exact rational arithmetic and converts to float
    once at the end, so equal graphs produce bit-identical values under
    any relabeling of the nodes.
    """
    ids = graph.node_ids
    n = len(ids)
    if n < 3:
        return {v: 0.0 for v in ids}
    adj = {v: sorted(graph.adjacency[v]) for v in ids}
    score: dict[str, Fraction] = {v: Fraction(0) for v in ids}

    for s in ids:
        order, parents, sigma = _bfs_shortest_paths(adj, s)
        delta: dict[str, Fraction] = {v: Fraction(0) for v in order}
        for w in reversed(order):
            coeff = (1 + delta[w]) / sigma[w]
            for v in parents[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                score[w] += delta[w]

    # score counts ordered (s, t) pairs, i.e. each unordered pair twice
    pairs = (n - 1) * (n - 2)
    return {v: float(score[v] / pairs) for v in ids}


def _bfs_shortest_paths(
    adj: Mapping[str, list[str]], s: str
) -> tuple[list[str], dict[str, list[str]], dict[str, int]]:
    """BFS from ``s``: visitation order, shortest-path predecessors, path counts."""
    dist = {s: 0}
    sigma = {s: 1}
    parents: dict[str, list[str]] = {s: []}
    order = [s]
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                sigma[u] = 0
                parents[u] = []
                order.append(u)
                queue.append(u)
            if dist[u] == dist[v] + 1:
                sigma[u] += sigma[v]
                parents[u].append(v)
    return order, parents, sigma


# --- topology files ---------------------------------------------------------

_TOPOLOGY_KEYS = frozenset({"nodes", "edges"})
_NODE_KEYS = frozenset({"id", "kind", "label"})
_EDGE_KEYS = frozenset({"a", "b", "weight"})


def parse_topology(doc: object) -> SosGraph:
    """Build a graph from a topology document (schema in the README).

    The document must be an object with exactly the keys "nodes" and
    "edges"; unknown keys are rejected.  Every node carries a "kind".
    Weights outside the standard {1.0, 0.5} classes are accepted but
    flagged with a :class:`WeightConventionWarning`.
    """
    if not isinstance(doc, dict):
        raise SchemaError("topology document must be a JSON object")
    _check_keys("topology", doc, _TOPOLOGY_KEYS, required=_TOPOLOGY_KEYS)
    if not isinstance(doc["nodes"], list) or not isinstance(doc["edges"], list):
        raise SchemaError("topology: 'nodes' and 'edges' must be arrays")

    profiles = []
    for item in doc["nodes"]:
        if not isinstance(item, dict):
            raise SchemaError(f"topology node entries must be objects, got {item!r}")
        _check_keys("topology node", item, _NODE_KEYS, required=frozenset({"id", "kind"}))
        try:
            kind = NodeKind(item["kind"])
        except ValueError:
            raise SchemaError(
                f"node {item.get('id')!r}: unknown kind {item['kind']!r}; "
                f"expected one of {sorted(k.value for k in NodeKind)}"
            ) from None
        profiles.append(NodeProfile(id=item["id"], kind=kind, label=item.get("label", "")))

    edge_objs = []
    for item in doc["edges"]:
        if not isinstance(item, dict):
            raise SchemaError(f"topology edge entries must be objects, got {item!r}")
        _check_keys("topology edge", item, _EDGE_KEYS, required=_EDGE_KEYS)
        edge_objs.append(Edge(item["a"], item["b"], item["weight"]))

    graph = build_graph(profiles, edge_objs)
    for e in graph.edges:
        if e.weight not in STANDARD_WEIGHTS:
            warnings.warn(
                f"edge {e.a!r}-{e.b!r}: weight {e.weight} outside the standard classes {{1.0, 0.5}}",
                WeightConventionWarning,
                stacklevel=2,
            )
    return graph


def load_topology(path: str | Path) -> SosGraph:
    """Read and validate a topology JSON file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    return parse_topology(doc)


def _check_keys(
    what: str, obj: Mapping[str, object], allowed: frozenset[str], required: frozenset[str]
) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise SchemaError(f"{what}: unknown keys {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise SchemaError(f"{what}: missing keys {sorted(missing)}")

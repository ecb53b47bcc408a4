"""Deterministic random-graph generation for the property and oracle suites."""

from __future__ import annotations

import random

from soscascade import NodeProfile, build_graph


def node_names(n):
    return [f"n{i:02d}" for i in range(n)]


def random_edge_list(rng: random.Random, nodes, edge_prob=None, unit_weights=False,
                     standard_weights=False):
    """Random simple edge set over ``nodes`` with the requested weight style."""
    if edge_prob is None:
        edge_prob = rng.uniform(0.2, 0.8)
    edges = []
    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            if rng.random() < edge_prob:
                if unit_weights:
                    w = 1.0
                elif standard_weights:
                    w = rng.choice((0.5, 1.0))
                else:
                    w = rng.uniform(0.05, 1.0)
                edges.append((a, b, w))
    return edges


def random_connected_edge_list(rng: random.Random, nodes, unit_weights=False):
    """Random spanning tree plus extra edges; connected by construction."""
    edges = []
    present = {}
    shuffled = list(nodes)
    rng.shuffle(shuffled)
    for i, v in enumerate(shuffled[1:], start=1):
        u = shuffled[rng.randrange(i)]
        w = 1.0 if unit_weights else rng.uniform(0.05, 1.0)
        edges.append((min(u, v), max(u, v), w))
        present[frozenset((u, v))] = True
    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            if frozenset((a, b)) in present:
                continue
            if rng.random() < 0.2:
                w = 1.0 if unit_weights else rng.uniform(0.05, 1.0)
                edges.append((a, b, w))
                present[frozenset((a, b))] = True
    return edges


def make_graph(nodes, edge_list):
    return build_graph([NodeProfile(v) for v in nodes], edge_list)


def random_case(rng: random.Random, max_nodes=10, **kwargs):
    """(nodes, edge_list, graph) for a random instance with 1..max_nodes nodes."""
    n = rng.randint(1, max_nodes)
    nodes = node_names(n)
    edges = random_edge_list(rng, nodes, **kwargs)
    return nodes, edges, make_graph(nodes, edges)


def random_alpha(rng: random.Random, nodes):
    return {v: rng.uniform(0.0, 1.0) for v in nodes}


def relabeling(rng: random.Random, nodes):
    """Random bijection onto fresh ids."""
    targets = [f"m{i:02d}" for i in range(len(nodes))]
    rng.shuffle(targets)
    return dict(zip(nodes, targets))

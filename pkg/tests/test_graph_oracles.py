"""Structural operations against brute-force oracles on random graphs."""

import random

from soscascade import articulation_points, betweenness_centrality

import reference
import util_graphs


def test_articulation_matches_node_removal_oracle():
    rng = random.Random(7)
    for _ in range(200):
        nodes, edges, g = util_graphs.random_case(rng, max_nodes=10)
        assert articulation_points(g) == reference.brute_articulation(nodes, edges)


def test_betweenness_matches_pair_counting_oracle_exactly():
    rng = random.Random(8)
    for _ in range(200):
        nodes, edges, g = util_graphs.random_case(rng, max_nodes=8)
        assert betweenness_centrality(g) == reference.brute_betweenness(nodes, edges)

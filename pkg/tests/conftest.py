import random
from itertools import combinations

from toggled.graphs import Graph


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def graph_from_edge_mask(n: int, edge_mask: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    adj = [0] * n
    for k, (i, j) in enumerate(pairs):
        if (edge_mask >> k) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))

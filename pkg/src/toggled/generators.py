"""Deterministic graph generators for the CLI, the service, and test corpora."""

from __future__ import annotations

import random
from typing import Sequence

from .graphs import Graph

KINDS = ("path", "cycle", "complete", "grid", "petersen", "erdos_renyi")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def grid_graph(rows: int, cols: int) -> Graph:
    """4-neighborhood grid, row-major vertex numbering."""
    if rows < 1 or cols < 1:
        raise ValueError(f"grid needs rows, cols >= 1, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def petersen_graph() -> Graph:
    # outer 5-cycle, inner pentagram, spokes
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """Each of the n(n-1)/2 edges present independently with probability p."""
    if n < 0:
        raise ValueError(f"negative vertex count {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} not in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def _int_params(kind: str, params: Sequence, expected: int) -> list[int]:
    if len(params) != expected:
        raise ValueError(f"{kind} takes {expected} parameter(s), got {len(params)}")
    out = []
    for x in params:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"{kind} parameters must be integers, got {x!r}")
        out.append(x)
    return out


def generate(kind: str, params: Sequence = (), seed: int | None = None) -> Graph:
    """Dispatch on kind; deterministic for fixed (kind, params, seed)."""
    if kind == "path":
        (n,) = _int_params(kind, params, 1)
        if n < 0:
            raise ValueError(f"path needs n >= 0, got {n}")
        return path_graph(n)
    if kind == "cycle":
        (n,) = _int_params(kind, params, 1)
        return cycle_graph(n)
    if kind == "complete":
        (n,) = _int_params(kind, params, 1)
        if n < 0:
            raise ValueError(f"complete needs n >= 0, got {n}")
        return complete_graph(n)
    if kind == "grid":
        rows, cols = _int_params(kind, params, 2)
        return grid_graph(rows, cols)
    if kind == "petersen":
        if params:
            raise ValueError("petersen takes no parameters")
        return petersen_graph()
    if kind == "erdos_renyi":
        if len(params) != 2:
            raise ValueError(f"erdos_renyi takes n and p, got {len(params)} parameter(s)")
        n, p = params
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"erdos_renyi vertex count must be an integer, got {n!r}")
        if seed is None:
            raise ValueError("erdos_renyi requires a seed")
        return erdos_renyi(n, float(p), seed)
    raise ValueError(f"unknown generator kind {kind!r}; expected one of {', '.join(KINDS)}")

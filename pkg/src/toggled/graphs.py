"""Simple undirected graphs and the press/toggle operations on them.

Pressing a vertex toggles the on/off state of the vertex and all its
neighbors. Press plans are stored as sets (bit vectors): presses commute and
a double press cancels, so composition is XOR.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .bits import BitVector
from .errors import GraphParseError

Configuration = BitVector
PressSet = BitVector


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[i]`` is the bitmask of neighbors of vertex i; symmetric and
    irreflexive by construction.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i}: neighbor index out of range")
            if (row >> i) & 1:
                raise ValueError(f"vertex {i}: self-loop")
        for i, row in enumerate(self.adj):
            m = row
            while m:
                low = m & -m
                j = low.bit_length() - 1
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
                m ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from an edge list; duplicate edges collapse to one."""
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """Closed neighborhood masks: {v} | N(v)."""
        return tuple(row | (1 << i) for i, row in enumerate(self.adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return [j for j in range(self.n) if (self.adj[v] >> j) & 1]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (i, j) pairs with i < j."""
        out = []
        for i in range(self.n):
            m = self.adj[i] >> (i + 1)
            j = i + 1
            while m:
                if m & 1:
                    out.append((i, j))
                m >>= 1
                j += 1
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


def parse_graph(text: str) -> Graph:
    """Parse either the edge-list format or the JSON object format."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_edge_list(text)


def _parse_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise GraphParseError(f"line {lineno}: expected a vertex count, got {line!r}")
            n = int(parts[0])
            continue
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected two vertex indices, got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer vertex index in {line!r}") from None
        if i == j:
            raise GraphParseError(f"line {lineno}: self-loop {i} {j}")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphParseError(f"line {lineno}: vertex index out of range for n={n}")
        edges.append((i, j))
    if n is None:
        raise GraphParseError("missing vertex count line")
    return Graph.from_edges(n, edges)


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise GraphParseError("JSON graph must be an object")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphParseError('JSON graph needs a non-negative integer "n"')
    edges = obj.get("edges", [])
    if not isinstance(edges, list):
        raise GraphParseError('"edges" must be a list of [i, j] pairs')
    pairs: list[tuple[int, int]] = []
    for k, e in enumerate(edges):
        if (
            not isinstance(e, (list, tuple))
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphParseError(f"edges[{k}]: expected a pair of integers, got {e!r}")
        i, j = e
        if i == j:
            raise GraphParseError(f"edges[{k}]: self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphParseError(f"edges[{k}]: vertex index out of range for n={n}")
        pairs.append((i, j))
    return Graph.from_edges(n, pairs)


def to_edge_list(g: Graph) -> str:
    """Serialize to the edge-list text format."""
    lines = [str(g.n)]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def to_json_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [[i, j] for i, j in g.edges()]}


def induced_subgraph(g: Graph, removed: int) -> tuple[Graph, dict[int, int]]:
    """Graph on V minus one vertex, plus the order-preserving index map old -> new."""
    if not 0 <= removed < g.n:
        raise ValueError(f"vertex {removed} out of range for n={g.n}")
    low_mask = (1 << removed) - 1
    rows = []
    for old in range(g.n):
        if old == removed:
            continue
        row = g.adj[old]
        rows.append((row & low_mask) | ((row >> (removed + 1)) << removed))
    index_map = {old: (old if old < removed else old - 1) for old in range(g.n) if old != removed}
    return Graph(g.n - 1, tuple(rows)), index_map


def press(c: Configuration, g: Graph, v: int) -> Configuration:
    """Toggle vertex v and all of its neighbors."""
    if c.n != g.n:
        raise ValueError(f"configuration length {c.n} does not match n={g.n}")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return BitVector(g.n, c.mask ^ g.closed[v])


def effect(g: Graph, s: PressSet) -> Configuration:
    """Toggle vector of a press-set: bit v is the parity of |({v} or N(v)) & s|."""
    if s.n != g.n:
        raise ValueError(f"press-set length {s.n} does not match n={g.n}")
    closed = g.closed
    sm = s.mask
    out = 0
    for v in range(g.n):
        if (closed[v] & sm).bit_count() & 1:
            out |= 1 << v
    return BitVector(g.n, out)


def apply_press_set(c: Configuration, g: Graph, s: PressSet) -> Configuration:
    """Fold the presses of s over c, in any order; equals c XOR effect(g, s)."""
    return c ^ effect(g, s)


def complement(c: Configuration) -> Configuration:
    return ~c


def odd_degree_vertices(g: Graph) -> list[int]:
    """Ascending list of vertices with odd degree; always even in length."""
    return [v for v in range(g.n) if g.adj[v].bit_count() & 1]

"""Exhaustive ground truth: brute-force press-set search and corpus-wide checks."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, NamedTuple

from .bits import BitVector
from .errors import CapExceededError
from .gf2 import in_span, solve_complement
from .graphs import Graph, effect, to_edge_list
from .inductive import DEFAULT_N_CAP, complementing_set

BRUTE_FORCE_CAP = 20
EXHAUSTIVE_CAP = 6


class BruteForceSolutions(NamedTuple):
    solutions: list[BitVector]
    minimum: BitVector | None


def brute_force_solutions(g: Graph, target: BitVector) -> BruteForceSolutions:
    """Every press-set whose effect equals target, sorted by weight then
    mask order; the minimum is the head of the list."""
    if g.n > BRUTE_FORCE_CAP:
        raise CapExceededError(f"brute force capped at n={BRUTE_FORCE_CAP}, got {g.n}")
    if target.n != g.n:
        raise ValueError(f"target length {target.n} does not match n={g.n}")
    closed = g.closed
    tm = target.mask
    hits = []
    eff = 0
    cur = 0
    if tm == 0:
        hits.append(0)
    # gray-code walk over all masks: one closed-neighborhood XOR per step
    for i in range(1, 1 << g.n):
        v = (i & -i).bit_length() - 1
        cur ^= 1 << v
        eff ^= closed[v]
        if eff == tm:
            hits.append(cur)
    sols = sorted((BitVector(g.n, m) for m in hits), key=BitVector.sort_key)
    return BruteForceSolutions(sols, sols[0] if sols else None)


@dataclass(frozen=True)
class GraphCorpus:
    """Iteration descriptor: every labeled graph on n vertices, or a seeded sample."""

    kind: str
    n: int
    count: int = 0
    seed: int = 0
    p: float = 0.5

    @classmethod
    def exhaustive(cls, n: int) -> "GraphCorpus":
        if n > EXHAUSTIVE_CAP:
            raise CapExceededError(f"exhaustive corpus capped at n={EXHAUSTIVE_CAP}, got {n}")
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        return cls(kind="exhaustive", n=n)

    @classmethod
    def sampled(cls, n: int, count: int, seed: int, p: float = 0.5) -> "GraphCorpus":
        if n < 0 or count < 0:
            raise ValueError(f"invalid sampled corpus: n={n}, count={count}")
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"edge probability {p} not in [0, 1]")
        return cls(kind="sampled", n=n, count=count, seed=seed, p=p)

    def size(self) -> int:
        if self.kind == "exhaustive":
            return 1 << (self.n * (self.n - 1) // 2)
        return self.count


def enumerate_graphs(corpus: GraphCorpus) -> Iterator[Graph]:
    """Yield the corpus in its fixed order; sampled streams are seed-reproducible."""
    if corpus.kind == "exhaustive":
        if corpus.n > EXHAUSTIVE_CAP:
            raise CapExceededError(f"exhaustive corpus capped at n={EXHAUSTIVE_CAP}, got {corpus.n}")
        pairs = list(combinations(range(corpus.n), 2))
        for edge_mask in range(1 << len(pairs)):
            adj = [0] * corpus.n
            m = edge_mask
            while m:
                low = m & -m
                i, j = pairs[low.bit_length() - 1]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                m ^= low
            yield Graph(corpus.n, tuple(adj))
    elif corpus.kind == "sampled":
        rng = random.Random(corpus.seed)
        for _ in range(corpus.count):
            adj = [0] * corpus.n
            for i in range(corpus.n):
                for j in range(i + 1, corpus.n):
                    if rng.random() < corpus.p:
                        adj[i] |= 1 << j
                        adj[j] |= 1 << i
            yield Graph(corpus.n, tuple(adj))
    else:
        raise ValueError(f"unknown corpus kind {corpus.kind!r}")


@dataclass
class TheoremReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps({"checked": self.checked, "failures": self.failures})


def verify_theorem(corpus: GraphCorpus, n_cap: int = DEFAULT_N_CAP) -> TheoremReport:
    """Check the always-complementable guarantee over a whole corpus.

    Per graph: the linear solver must find an all-ones press-set, the
    constructive solver's answer must have all-ones effect, and the two
    must differ only by a quiet pattern. Failing graphs are reported as
    edge-list strings; the expectation is that there are none.
    """
    report = TheoremReport()
    for g in enumerate_graphs(corpus):
        report.checked += 1
        ones = BitVector.ones(g.n)
        ok = True
        try:
            outcome = solve_complement(g)
            if effect(g, outcome.particular) != ones:
                ok = False
            constructed, _ = complementing_set(g, n_cap=n_cap)
            if effect(g, constructed) != ones:
                ok = False
            if ok and not in_span(outcome.nullspace_basis, constructed ^ outcome.particular):
                ok = False
        except RuntimeError:
            ok = False
        if not ok:
            report.failures.append(to_edge_list(g))
    return report

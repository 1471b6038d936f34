"""Constructive complement solver by induction over induced subgraphs.

Works entirely in root-graph vertex indices: an induced subgraph is
identified by the bitmask of its vertex subset, and a press-set for it is a
sub-mask. The recursion for a subset M:

  1. |M| <= 1: press everything in M.
  2. Pair the odd-degree vertices of M's induced subgraph ascending.
  3. For each pair (a, b): recursively complement M minus a; if that set
     also toggles a, it already complements all of M and is returned at
     once (the short-circuit). Same check for b. Otherwise XOR of the two
     sub-answers toggles exactly {a, b}.
  4. XOR of all pair-sets, then press every vertex of M once: pair-sets
     flip the odd-degree vertices, the press-all flips the even-degree
     ones, so every vertex flips exactly once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .bits import BitVector
from .errors import CapExceededError
from .graphs import Graph

DEFAULT_N_CAP = 24
DEFAULT_MEMO_BUDGET = 1 << 20

ENTER = "recursion-enter"
EXIT = "recursion-exit"
BASE_CASE = "base-case"
SHORT_CIRCUIT = "short-circuit"
PAIR = "pair"
PRESS_ALL = "press-all"


class MemoTable:
    """Subset mask -> complementing press mask of the induced subgraph on it."""

    __slots__ = ("entries", "budget")

    def __init__(self, budget: int = DEFAULT_MEMO_BUDGET):
        self.entries: dict[int, int] = {}
        self.budget = budget

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, mask: int) -> int | None:
        return self.entries.get(mask)

    def put(self, mask: int, press: int) -> None:
        if len(self.entries) >= self.budget:
            raise CapExceededError(
                f"memo budget exceeded: {len(self.entries)} entries at budget {self.budget}"
            )
        self.entries[mask] = press


@dataclass(frozen=True)
class Trace:
    """Ordered event log of one solver run; replaying it rebuilds the answer.

    Events are tuples: (ENTER, mask), (EXIT, mask), (BASE_CASE,),
    (SHORT_CIRCUIT, v), (PAIR, a, b), (PRESS_ALL,). An ENTER immediately
    followed by its EXIT marks a memo hit.
    """

    events: tuple[tuple, ...]
    n: int

    def replay(self) -> BitVector:
        """Reconstruct the returned press-set from the event log alone."""
        known: dict[int, int] = {}
        stack: list[_ReplayFrame] = []
        answer = 0
        for ev in self.events:
            tag = ev[0]
            if tag == ENTER:
                stack.append(_ReplayFrame(ev[1]))
            elif tag == BASE_CASE:
                stack[-1].answer = stack[-1].mask
            elif tag == SHORT_CIRCUIT:
                stack[-1].answer = stack[-1].children[-1]
            elif tag == PAIR:
                frame = stack[-1]
                pb = frame.children.pop()
                pa = frame.children.pop()
                frame.acc ^= pa ^ pb
            elif tag == PRESS_ALL:
                frame = stack[-1]
                frame.answer = frame.acc ^ frame.mask
            elif tag == EXIT:
                frame = stack.pop()
                if frame.answer is None:
                    # empty body: a memo hit for a mask solved earlier
                    frame.answer = known[frame.mask]
                known[frame.mask] = frame.answer
                if stack:
                    stack[-1].children.append(frame.answer)
                else:
                    answer = frame.answer
            else:
                raise ValueError(f"unknown trace event {ev!r}")
        return BitVector(self.n, answer)

    def top_level_events(self) -> list[tuple]:
        """Events of the root invocation only, nested recursions elided."""
        depth = 0
        out = []
        for ev in self.events:
            if ev[0] == ENTER:
                depth += 1
            elif ev[0] == EXIT:
                depth -= 1
            elif depth == 1:
                out.append(ev)
        return out

    def to_json(self) -> list[dict]:
        """Serialize as a list of event objects; masks become vertex lists."""
        out = []
        for ev in self.events:
            tag = ev[0]
            if tag in (ENTER, EXIT):
                out.append({"event": tag, "vertices": _mask_indices(ev[1])})
            elif tag == SHORT_CIRCUIT:
                out.append({"event": tag, "vertex": ev[1]})
            elif tag == PAIR:
                out.append({"event": tag, "a": ev[1], "b": ev[2]})
            else:
                out.append({"event": tag})
        return out

    def to_json_text(self) -> str:
        return json.dumps(self.to_json())

    def to_lines(self) -> list[str]:
        """Line-oriented text form, indented by recursion depth."""
        lines = []
        depth = 0
        for ev in self.events:
            tag = ev[0]
            if tag == ENTER:
                lines.append("  " * depth + f"{tag} {{{_mask_csv(ev[1])}}}")
                depth += 1
            elif tag == EXIT:
                depth -= 1
                lines.append("  " * depth + f"{tag} {{{_mask_csv(ev[1])}}}")
            elif tag == SHORT_CIRCUIT:
                lines.append("  " * depth + f"{tag} {ev[1]}")
            elif tag == PAIR:
                lines.append("  " * depth + f"{tag} {ev[1]} {ev[2]}")
            else:
                lines.append("  " * depth + tag)
        return lines

    def to_text(self) -> str:
        return "\n".join(self.to_lines()) + "\n"


class _ReplayFrame:
    __slots__ = ("mask", "children", "acc", "answer")

    def __init__(self, mask: int):
        self.mask = mask
        self.children: list[int] = []
        self.acc = 0
        self.answer: int | None = None


def _mask_indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask_csv(mask: int) -> str:
    return ",".join(str(i) for i in _mask_indices(mask))


class PairToggleResult(NamedTuple):
    press_set: BitVector
    short_circuit: bool


def toggle_parity_at(g: Graph, s: BitVector, v: int) -> int:
    """Bit v of effect(g, s): does the press-set toggle v?"""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    if s.n != g.n:
        raise ValueError(f"press-set length {s.n} does not match n={g.n}")
    return (g.closed[v] & s.mask).bit_count() & 1


def complementing_set(
    g: Graph,
    n_cap: int = DEFAULT_N_CAP,
    memo_budget: int = DEFAULT_MEMO_BUDGET,
) -> tuple[BitVector, Trace]:
    """Press-set whose effect is all-ones, built constructively.

    Applying the result to any configuration yields its complement. Uses a
    fresh memo table per call so the trace is self-contained.
    """
    if g.n > n_cap:
        raise CapExceededError(f"graph has {g.n} vertices, above the constructive cap {n_cap}")
    memo = MemoTable(memo_budget)
    events: list[tuple] = []
    full = (1 << g.n) - 1
    answer = _solve(g.adj, full, memo, events)
    return BitVector(g.n, answer), Trace(tuple(events), g.n)


def pair_toggle_set(g: Graph, a: int, b: int, memo: MemoTable | None = None) -> PairToggleResult:
    """Press-set toggling exactly {a, b}, or a short-circuited full complement.

    The proof step for one pair: complement G minus a, and if that set also
    toggles a it already complements all of G. Otherwise the same for b;
    otherwise the XOR of the two sub-answers cancels everywhere else.
    """
    if a == b:
        raise ValueError(f"pair vertices must be distinct, got {a} twice")
    for v in (a, b):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    if memo is None:
        memo = MemoTable()
    events: list[tuple] = []
    adj = g.adj
    full = (1 << g.n) - 1
    pa = _solve(adj, full & ~(1 << a), memo, events)
    if (adj[a] & pa).bit_count() & 1:
        return PairToggleResult(BitVector(g.n, pa), True)
    pb = _solve(adj, full & ~(1 << b), memo, events)
    if (adj[b] & pb).bit_count() & 1:
        return PairToggleResult(BitVector(g.n, pb), True)
    return PairToggleResult(BitVector(g.n, pa ^ pb), False)


def _solve(adj: tuple[int, ...], mask: int, memo: MemoTable, events: list[tuple]) -> int:
    """Complementing press mask for the induced subgraph on ``mask``."""
    events.append((ENTER, mask))
    cached = memo.get(mask)
    if cached is not None:
        events.append((EXIT, mask))
        return cached
    if mask.bit_count() <= 1:
        events.append((BASE_CASE,))
        memo.put(mask, mask)
        events.append((EXIT, mask))
        return mask
    odd = []
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if (adj[v] & mask).bit_count() & 1:
            odd.append(v)
        m ^= low
    acc = 0
    answer = None
    for i in range(0, len(odd), 2):
        a, b = odd[i], odd[i + 1]
        pa = _solve(adj, mask & ~(1 << a), memo, events)
        # sub-answers avoid a, so the closed neighborhood check reduces to N(a)
        if (adj[a] & pa).bit_count() & 1:
            events.append((SHORT_CIRCUIT, a))
            answer = pa
            break
        pb = _solve(adj, mask & ~(1 << b), memo, events)
        if (adj[b] & pb).bit_count() & 1:
            events.append((SHORT_CIRCUIT, b))
            answer = pb
            break
        events.append((PAIR, a, b))
        acc ^= pa ^ pb
    if answer is None:
        events.append((PRESS_ALL,))
        answer = acc ^ mask
    memo.put(mask, answer)
    events.append((EXIT, mask))
    return answer

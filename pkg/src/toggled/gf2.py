"""GF(2) linear algebra: the adjacency-plus-identity system, elimination, solving.

Pressing the set x changes the configuration by M x where M = A + I over
GF(2). Rows are bit-packed; elimination switches to a numpy word-packed
kernel above a width threshold, with identical results on both paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bits import BitVector
from .errors import CapExceededError
from .graphs import Graph

DEFAULT_NULLITY_CAP = 24

# below this width the plain python-int path beats numpy call overhead
_PACKED_WIDTH_THRESHOLD = 256


@dataclass(frozen=True)
class GF2Matrix:
    """Dense matrix over GF(2); row i is a bit mask of ``width`` columns."""

    rows: tuple[int, ...]
    width: int

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError(f"negative width {self.width}")
        full = (1 << self.width) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} has bits beyond width {self.width}")

    @property
    def height(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Elimination:
    """RREF together with the recorded row operations.

    ``transform[i]`` is the mask of original rows whose XOR equals
    ``rref[i]``, so any right-hand side can be solved without
    re-eliminating.
    """

    rref: tuple[int, ...]
    transform: tuple[int, ...]
    pivots: tuple[int, ...]
    width: int

    @property
    def rank(self) -> int:
        return len(self.pivots)


@dataclass(frozen=True)
class SolveOutcome:
    """One particular solution plus a basis of the quiet patterns."""

    particular: BitVector
    nullspace_basis: tuple[BitVector, ...]
    rank: int

    @property
    def nullity(self) -> int:
        return len(self.nullspace_basis)

    @property
    def solution_count(self) -> int:
        return 1 << self.nullity


def build_system(g: Graph) -> GF2Matrix:
    """n x n matrix with M[i][j] = 1 iff i = j or j is a neighbor of i."""
    return GF2Matrix(g.closed, g.n)


def eliminate(m: GF2Matrix) -> Elimination:
    """Gauss-Jordan to reduced row echelon form over GF(2).

    Pivot rule: the lowest-index remaining row with a 1 in the current
    column, swapped up; deterministic output.
    """
    if m.width > _PACKED_WIDTH_THRESHOLD:
        return _eliminate_packed(m)
    return _eliminate_ints(m)


def _eliminate_ints(m: GF2Matrix) -> Elimination:
    nrows, width = m.height, m.width
    # transform tracked in the high bits of each augmented row
    aug = [row | (1 << (width + i)) for i, row in enumerate(m.rows)]
    r = 0
    pivots = []
    for c in range(width):
        piv = -1
        for rr in range(r, nrows):
            if (aug[rr] >> c) & 1:
                piv = rr
                break
        if piv < 0:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        prow = aug[r]
        for rr in range(nrows):
            if rr != r and (aug[rr] >> c) & 1:
                aug[rr] ^= prow
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    low = (1 << width) - 1
    return Elimination(
        rref=tuple(a & low for a in aug),
        transform=tuple(a >> width for a in aug),
        pivots=tuple(pivots),
        width=width,
    )


def _eliminate_packed(m: GF2Matrix) -> Elimination:
    nrows, width = m.height, m.width
    mw = (width + 63) // 64
    tw = (nrows + 63) // 64
    a = np.zeros((nrows, mw + tw), dtype=np.uint64)
    for i, row in enumerate(m.rows):
        a[i, :mw] = np.frombuffer(row.to_bytes(mw * 8, "little"), dtype="<u8")
        a[i, mw + (i >> 6)] = np.uint64(1) << np.uint64(i & 63)
    one = np.uint64(1)
    r = 0
    pivots = []
    for c in range(width):
        w, bit = c >> 6, np.uint64(c & 63)
        col = (a[r:, w] >> bit) & one
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            tmp = a[r].copy()
            a[r] = a[p]
            a[p] = tmp
        hits = np.nonzero((a[:, w] >> bit) & one)[0]
        hits = hits[hits != r]
        if hits.size:
            a[hits] ^= a[r]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    rref = tuple(int.from_bytes(a[i, :mw].tobytes(), "little") for i in range(nrows))
    transform = tuple(int.from_bytes(a[i, mw:].tobytes(), "little") for i in range(nrows))
    return Elimination(rref=rref, transform=transform, pivots=tuple(pivots), width=width)


def _nullspace_masks(elim: Elimination) -> list[int]:
    """Basis of the kernel: one vector per free column, free columns ascending."""
    pivset = set(elim.pivots)
    basis = []
    for f in range(elim.width):
        if f in pivset:
            continue
        v = 1 << f
        for r, c in enumerate(elim.pivots):
            if (elim.rref[r] >> f) & 1:
                v |= 1 << c
        basis.append(v)
    return basis


def solve_using(elim: Elimination, target: BitVector) -> SolveOutcome | None:
    """Solve against a recorded elimination; None when inconsistent."""
    tm = target.mask
    y = [(t & tm).bit_count() & 1 for t in elim.transform]
    rank = elim.rank
    if any(y[rank:]):
        return None
    x = 0
    for r, c in enumerate(elim.pivots):
        if y[r]:
            x |= 1 << c
    basis = _nullspace_masks(elim)
    return SolveOutcome(
        particular=BitVector(elim.width, x),
        nullspace_basis=tuple(BitVector(elim.width, b) for b in basis),
        rank=rank,
    )


def solve(g: Graph, target: BitVector) -> SolveOutcome | None:
    """Press-sets whose effect is ``target``; None when unsolvable.

    Free variables of the particular solution are set to 0.
    """
    if target.n != g.n:
        raise ValueError(f"target length {target.n} does not match n={g.n}")
    return solve_using(eliminate(build_system(g)), target)


def solve_complement(g: Graph) -> SolveOutcome:
    """Solve for the all-ones toggle; never unsolvable on any simple graph."""
    outcome = solve(g, BitVector.ones(g.n))
    if outcome is None:
        raise RuntimeError(
            "all-ones target reported unsolvable; this contradicts a proven "
            "guarantee and signals a solver bug"
        )
    return outcome


def solve_transition(g: Graph, start: BitVector, goal: BitVector) -> SolveOutcome | None:
    """Press-sets taking ``start`` to ``goal``; reduces to the XOR delta."""
    if start.n != g.n or goal.n != g.n:
        raise ValueError(f"configuration lengths {start.n}/{goal.n} do not match n={g.n}")
    return solve(g, start ^ goal)


def min_weight_solution(outcome: SolveOutcome, nullity_cap: int = DEFAULT_NULLITY_CAP) -> BitVector:
    """Minimum-Hamming-weight member of the solution coset.

    Enumerates all 2^nullity coset members; ties break to the smallest bit
    mask with index 0 least significant, so the set pressing the earliest
    vertices wins.
    """
    d = outcome.nullity
    if d > nullity_cap:
        raise CapExceededError(f"nullity {d} exceeds the enumeration cap {nullity_cap}")
    basis = [b.mask for b in outcome.nullspace_basis]
    best = cur = outcome.particular.mask
    best_w = best.bit_count()
    for i in range(1, 1 << d):
        # gray-code walk: one basis XOR per step
        cur ^= basis[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        if w < best_w or (w == best_w and cur < best):
            best, best_w = cur, w
    return BitVector(outcome.particular.n, best)


def in_span(vectors: Sequence[BitVector], v: BitVector) -> bool:
    """True when v is an XOR combination of ``vectors`` (the zero combination counts)."""
    pivots: list[tuple[int, int]] = []
    for vec in vectors:
        m = vec.mask
        for low, pv in pivots:
            if m & low:
                m ^= pv
        if m:
            pivots.append((m & -m, m))
    m = v.mask
    for low, pv in pivots:
        if m & low:
            m ^= pv
    return m == 0

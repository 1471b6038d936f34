"""Independent naive reference implementations used only as test oracles.

Deliberately unpacked (lists of 0/1 ints) and straight-line, sharing no
code with the package under test.
"""

from __future__ import annotations


def naive_rref(rows: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Reduced row echelon form over GF(2), one bit per list entry."""
    m = [row[:] for row in rows]
    nrows = len(m)
    width = len(m[0]) if m else 0
    r = 0
    for c in range(width):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                m[i] = [x ^ y for x, y in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r, m


def naive_solve(rows: list[list[int]], rhs: list[int]):
    """Solve M x = rhs over GF(2).

    Returns (particular, basis) with free variables zeroed, or (None, basis)
    when inconsistent. basis spans the kernel of M.
    """
    nrows = len(rows)
    width = len(rows[0]) if rows else 0
    aug = [rows[i][:] + [rhs[i]] for i in range(nrows)]
    r = 0
    pivcols = []
    for c in range(width):
        piv = None
        for i in range(r, nrows):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(nrows):
            if i != r and aug[i][c]:
                aug[i] = [x ^ y for x, y in zip(aug[i], aug[r])]
        pivcols.append(c)
        r += 1
        if r == nrows:
            break

    basis = []
    free = [c for c in range(width) if c not in pivcols]
    for f in free:
        v = [0] * width
        v[f] = 1
        for i, c in enumerate(pivcols):
            v[c] = aug[i][f]
        basis.append(v)

    for i in range(r, nrows):
        if aug[i][width]:
            return None, basis
    particular = [0] * width
    for i, c in enumerate(pivcols):
        particular[c] = aug[i][width]
    return particular, basis


def adjacency_lists(g) -> list[list[int]]:
    """Plain 0/1 matrix of A + I for a Graph, rebuilt from neighbor queries."""
    m = []
    for i in range(g.n):
        row = [0] * g.n
        row[i] = 1
        for j in g.neighbors(i):
            row[j] = 1
        m.append(row)
    return m


def bits_of(vec: list[int]) -> str:
    return "".join(str(b) for b in vec)

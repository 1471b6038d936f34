import random

import pytest

from toggled.bits import BitVector
from toggled.errors import CapExceededError
from toggled.generators import complete_graph, cycle_graph, grid_graph, path_graph
from toggled.gf2 import (
    GF2Matrix,
    _eliminate_ints,
    _eliminate_packed,
    build_system,
    eliminate,
    in_span,
    min_weight_solution,
    solve,
    solve_complement,
    solve_transition,
)
from toggled.graphs import Graph, effect

from conftest import random_graph
from reference import adjacency_lists, naive_rref


def rows_to_strings(m: GF2Matrix) -> list[str]:
    return [BitVector(m.width, r).to_string() for r in m.rows]


# ---------------------------------------------------------------- system

def test_build_system_path3():
    assert rows_to_strings(build_system(path_graph(3))) == ["110", "111", "011"]


def test_build_system_isolated_vertex():
    assert build_system(path_graph(1)).rows == (1,)


def test_build_system_complete4():
    assert rows_to_strings(build_system(complete_graph(4))) == ["1111"] * 4


def test_build_system_symmetric():
    g = grid_graph(3, 3)
    m = build_system(g)
    for i in range(g.n):
        for j in range(g.n):
            assert (m.rows[i] >> j) & 1 == (m.rows[j] >> i) & 1


def test_gf2matrix_validates_width():
    with pytest.raises(ValueError):
        GF2Matrix((0b100,), 2)


# ---------------------------------------------------------------- eliminate

def test_eliminate_ranks_against_naive_reference():
    for g, expected in ((path_graph(3), 3), (complete_graph(4), 1), (complete_graph(2), 1)):
        elim = eliminate(build_system(g))
        naive_rank, _ = naive_rref(adjacency_lists(g))
        assert elim.rank == naive_rank == expected


def test_eliminate_agrees_with_naive_on_random_matrices():
    rng = random.Random(1138)
    for _ in range(120):
        height = rng.randrange(0, 9)
        width = rng.randrange(0, 9)
        if height and width:
            rows = [rng.getrandbits(width) for _ in range(height)]
        else:
            rows = [0] * height
        elim = eliminate(GF2Matrix(tuple(rows), width))
        bit_rows = [[(r >> c) & 1 for c in range(width)] for r in rows]
        naive_rank, naive_m = naive_rref(bit_rows)
        assert elim.rank == naive_rank
        got = [[(r >> c) & 1 for c in range(width)] for r in elim.rref]
        assert got == naive_m


def test_eliminate_agrees_with_naive_up_to_64():
    rng = random.Random(7)
    for _ in range(20):
        width = rng.randrange(1, 65)
        height = rng.randrange(1, 65)
        rows = [rng.getrandbits(width) for _ in range(height)]
        elim = eliminate(GF2Matrix(tuple(rows), width))
        naive_rank, _ = naive_rref([[(r >> c) & 1 for c in range(width)] for r in rows])
        assert elim.rank == naive_rank


def test_packed_and_int_paths_agree():
    rng = random.Random(99)
    for _ in range(25):
        width = rng.randrange(1, 400)
        height = rng.randrange(1, 80)
        m = GF2Matrix(tuple(rng.getrandbits(width) for _ in range(height)), width)
        a = _eliminate_ints(m)
        b = _eliminate_packed(m)
        assert (a.rref, a.transform, a.pivots) == (b.rref, b.transform, b.pivots)


def test_transform_reproduces_rref():
    rng = random.Random(5)
    for _ in range(40):
        width = rng.randrange(1, 30)
        height = rng.randrange(1, 30)
        rows = [rng.getrandbits(width) for _ in range(height)]
        elim = eliminate(GF2Matrix(tuple(rows), width))
        for i in range(height):
            combined = 0
            t = elim.transform[i]
            while t:
                low = t & -t
                combined ^= rows[low.bit_length() - 1]
                t ^= low
            assert combined == elim.rref[i]


# ---------------------------------------------------------------- solve

def test_solve_path3_all_ones_unique():
    p3 = path_graph(3)
    outcome = solve(p3, BitVector.ones(3))
    assert outcome is not None
    assert outcome.particular == BitVector.from_indices(3, [1])
    assert outcome.nullity == 0
    assert outcome.solution_count == 1


def test_solve_k2_unreachable_delta():
    assert solve(complete_graph(2), BitVector.from_string("01")) is None
    assert solve(complete_graph(2), BitVector.from_string("10")) is None
    assert solve(complete_graph(2), BitVector.from_string("11")) is not None


def test_solve_complete4_all_ones():
    outcome = solve(complete_graph(4), BitVector.ones(4))
    assert outcome is not None
    assert outcome.solution_count == 8
    # any odd-cardinality subset works; the particular must be one of them
    assert outcome.particular.weight % 2 == 1
    assert effect(complete_graph(4), outcome.particular) == BitVector.ones(4)


def test_solve_roundtrip_and_quiet_patterns():
    rng = random.Random(42)
    for _ in range(60):
        g = random_graph(rng.randrange(0, 11), rng)
        target = BitVector(g.n, rng.getrandbits(g.n) if g.n else 0)
        outcome = solve(g, target)
        if outcome is None:
            continue
        assert effect(g, outcome.particular) == target
        for b in outcome.nullspace_basis:
            assert effect(g, b) == BitVector.zeros(g.n)
        # basis vectors are linearly independent
        for k, b in enumerate(outcome.nullspace_basis):
            assert not in_span(outcome.nullspace_basis[:k], b)


def test_solve_length_mismatch():
    with pytest.raises(ValueError):
        solve(path_graph(3), BitVector.zeros(2))


def test_solve_complement_path4():
    outcome = solve_complement(path_graph(4))
    assert effect(path_graph(4), outcome.particular) == BitVector.ones(4)
    assert outcome.particular == BitVector.from_indices(4, [0, 3])


def test_solve_complement_cycle4_unique():
    outcome = solve_complement(cycle_graph(4))
    assert outcome.rank == 4
    assert outcome.nullity == 0
    assert outcome.particular == BitVector.ones(4)


def test_solve_complement_empty_graph():
    outcome = solve_complement(Graph(0, ()))
    assert outcome.particular == BitVector.zeros(0)
    assert outcome.solution_count == 1


def test_solve_transition():
    p3 = path_graph(3)
    same = solve_transition(p3, BitVector.from_string("010"), BitVector.from_string("010"))
    assert same is not None and same.particular == BitVector.zeros(3)
    assert solve_transition(complete_graph(2), BitVector.zeros(2), BitVector.from_string("01")) is None
    out = solve_transition(p3, BitVector.from_string("101"), BitVector.from_string("010"))
    assert out is not None and out.particular == BitVector.from_indices(3, [1])


# ---------------------------------------------------------------- min weight

def test_min_weight_complete4():
    outcome = solve(complete_graph(4), BitVector.ones(4))
    best = min_weight_solution(outcome)
    assert best == BitVector.from_indices(4, [0])


def test_min_weight_no_nullspace():
    outcome = solve(path_graph(3), BitVector.ones(3))
    assert min_weight_solution(outcome) == BitVector.from_indices(3, [1])


def test_min_weight_grid5_is_15():
    outcome = solve_complement(grid_graph(5, 5))
    assert outcome.nullity == 2
    assert min_weight_solution(outcome).weight == 15


def test_min_weight_cap_exceeded():
    outcome = solve(complete_graph(4), BitVector.ones(4))
    assert outcome.nullity == 3
    with pytest.raises(CapExceededError, match="3.*2"):
        min_weight_solution(outcome, nullity_cap=2)


def test_min_weight_matches_exhaustive_coset_scan():
    rng = random.Random(77)
    for _ in range(40):
        g = random_graph(rng.randrange(1, 9), rng)
        target = BitVector(g.n, rng.getrandbits(g.n))
        outcome = solve(g, target)
        if outcome is None:
            continue
        best = min_weight_solution(outcome)
        # plain scan of the whole coset, no gray code
        members = [outcome.particular.mask]
        for combo in range(1, 1 << outcome.nullity):
            m = outcome.particular.mask
            for i in range(outcome.nullity):
                if (combo >> i) & 1:
                    m ^= outcome.nullspace_basis[i].mask
            members.append(m)
        expected = min(
            (BitVector(g.n, m) for m in members), key=BitVector.sort_key
        )
        assert best == expected


# ---------------------------------------------------------------- span

def test_in_span():
    vs = [BitVector.from_string("1100"), BitVector.from_string("0110")]
    assert in_span(vs, BitVector.from_string("1010"))
    assert in_span(vs, BitVector.zeros(4))
    assert not in_span(vs, BitVector.from_string("0001"))
    assert in_span([], BitVector.zeros(3))
    assert not in_span([], BitVector.from_string("100"))

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from oracles import fm_feasible, fm_system
from onelap.eigen import binary_vector, eigen_system
from onelap.feasibility import EdgeVariableSystem, Equal, Interval, solve
from onelap.graph import named_graph


def test_forced_variable():
    res = solve(EdgeVariableSystem({(1, 2): (1, 1)}, {1: Equal(1), 2: Interval(-1, 1)}))
    assert res and res.witness == {(1, 2): 1}


def test_g6_binary_system_has_witness():
    G = named_graph("G6")
    system = eigen_system(G, F(5, 9), binary_vector(G, {2, 5, 6}))
    res = solve(system)
    assert res and system.check(res.witness)
    # the hand witness, written in canonical orientation i < j
    hand = {(1, 2): F(-1), (1, 5): F(-1), (1, 6): F(-1), (2, 3): F(1), (2, 4): F(1),
            (3, 4): F(0), (2, 5): F(-7, 9), (1, 3): F(1, 9), (1, 4): F(1, 9), (5, 6): F(-1, 9)}
    assert system.check(hand)
    flipped = {**hand, (1, 3): F(-1, 9), (1, 4): F(-1, 9), (5, 6): F(1, 9)}
    assert not system.check(flipped)


def test_pendant_overload_is_infeasible():
    # four incident variables in [-1, 1], two forced to -1, required sum 4
    edges = {(3, 1): (-1, 1), (3, 2): (-1, 1), (3, 4): (-1, -1), (3, 5): (-1, -1)}
    res = solve(EdgeVariableSystem(edges, {3: Equal(4)}))
    assert not res
    assert 3 in res.violated_cut["constrained"]


def test_malformed_box():
    with pytest.raises(ValueError):
        EdgeVariableSystem({(1, 2): (1, 0)}, {})
    with pytest.raises(ValueError):
        Interval(1, 0)


def test_empty_and_isolated():
    assert solve(EdgeVariableSystem({}, {}))
    assert solve(EdgeVariableSystem({}, {4: Interval(-1, 1)}))
    assert not solve(EdgeVariableSystem({}, {4: Equal(1)}))


def _random_system(rng, nv, ne):
    verts = list(range(1, nv + 1))
    edges = {}
    while len(edges) < ne:
        i, j = rng.sample(verts, 2)
        if (j, i) in edges or (i, j) in edges:
            continue
        lo = F(rng.randint(-4, 4), rng.choice([1, 2, 3]))
        hi = lo + F(rng.randint(0, 4), rng.choice([1, 2]))
        if rng.random() < 0.3:
            hi = lo
        edges[(i, j)] = (lo, hi)
    rows = {}
    for v in verts:
        r = rng.random()
        if r < 0.4:
            rows[v] = Equal(F(rng.randint(-4, 4), rng.choice([1, 2])))
        elif r < 0.8:
            a = F(rng.randint(-4, 4), 2)
            rows[v] = Interval(a, a + F(rng.randint(0, 3), 2))
    return EdgeVariableSystem(edges, rows)


def _fm(system):
    rows = {v: c.bounds for v, c in system.vertex_constraints.items()}
    ineq, n = fm_system(system.edges, rows)
    return fm_feasible(ineq, n)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_agrees_with_fourier_motzkin(seed):
    rng = random.Random(seed)
    nv = rng.randint(2, 5)
    ne = rng.randint(1, min(6, nv * (nv - 1) // 2))
    system = _random_system(rng, nv, ne)
    res = solve(system)
    assert bool(res) == _fm(system)
    if res:
        assert system.check(res.witness)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9), st.fractions(min_value=F(1, 7), max_value=7))
def test_scaling_preserves_verdict(seed, c):
    rng = random.Random(seed)
    nv = rng.randint(2, 6)
    system = _random_system(rng, nv, rng.randint(1, min(8, nv * (nv - 1) // 2)))
    scaled_rows = {}
    for v, con in system.vertex_constraints.items():
        scaled_rows[v] = Equal(con.value * c) if isinstance(con, Equal) else Interval(con.lo * c, con.hi * c)
    scaled = EdgeVariableSystem({e: (lo * c, hi * c) for e, (lo, hi) in system.edges.items()}, scaled_rows)
    assert bool(solve(system)) == bool(solve(scaled))

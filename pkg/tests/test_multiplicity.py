from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from onelap.eigen import binary_vector, is_eigenpair, normalize, one_norm
from onelap.graph import Graph, named_graph, path_graph
from onelap.multiplicity import algebraic_multiplicity, rank, reconstruct, triangle_decompose
from onelap.spectrum import spectrum

TABLE_AM = [1, 2, 1, 4, 1, 4, 2, 1, 6]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=6))
def test_rank_matches_numpy(rows):
    assert rank(rows) == np.linalg.matrix_rank(np.array(rows, dtype=float))


def test_table_of_multiplicities(G6):
    values = spectrum(G6).values
    assert [algebraic_multiplicity(G6, mu)[0] for mu in values] == TABLE_AM
    for mu in values:
        am, system = algebraic_multiplicity(G6, mu)
        assert len(system.members) == system.rank == am
        rows = [[1 if v in A else 0 for v in G6.vertices] for A in system.members]
        assert rank(rows) == am
        for A in system.members:
            assert is_eigenpair(G6, mu, binary_vector(G6, A))


def test_three_fifths_row(G6):
    am, system = algebraic_multiplicity(G6, F(3, 5))
    sups = {frozenset(s) for s in ({5, 6}, {2, 4, 5}, {1, 4, 6}, {2, 3, 5}, {1, 3, 6})}
    assert am == 4 and set(system.members) <= sups


def test_not_an_eigenvalue(G6):
    with pytest.raises(ValueError):
        algebraic_multiplicity(G6, F(1, 2))


def test_triangle_decomposition_10g():
    G = named_graph("EX_10G")
    x = normalize(G, [-1] * 4 + [1] * 6)
    terms = triangle_decompose(G, F(1, 7), x)
    assert sorted(t.coefficient for t in terms) == [F(1, 4), F(1, 4), F(1, 2)]
    assert reconstruct(G, terms) == x


def test_triangle_decomposition_multilevel():
    # sum of two disjoint binary eigenvectors with different weights
    P = path_graph(7)
    x = tuple(F(2, 3) * a + F(1, 3) * b for a, b in zip(binary_vector(P, {1, 2}), binary_vector(P, {6, 7})))
    assert one_norm(P, x) == 1
    terms = triangle_decompose(P, F(1, 3), x)
    assert reconstruct(P, terms) == x
    assert sum(t.coefficient for t in terms) == 1


def test_triangle_rejects(G6):
    with pytest.raises(ValueError):
        triangle_decompose(G6, F(5, 9), [0, 1, 0, 0, 1, 1])
    with pytest.raises(ValueError):
        triangle_decompose(G6, F(1, 2), binary_vector(G6, {2, 5, 6}))
    with pytest.raises(ValueError):
        algebraic_multiplicity(Graph(4, frozenset({(1, 2), (3, 4)})), F(1, 2))

"""Invariants checked on a fixed random corpus of 200 connected graphs with n <= 8."""

from fractions import Fraction as F
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from conftest import connected_graphs, corpus
from onelap.cheeger import cheeger_h, k_way_cheeger
from onelap.eigen import (binary_vector, energy_I, in_pi, is_eigenpair, normalize, one_norm,
                          sign_pattern)
from onelap.graph import connected_components, psi
from onelap.multiplicity import algebraic_multiplicity, reconstruct, triangle_decompose
from onelap.nodal import nu
from onelap.spectrum import spectrum

CORPUS = corpus(200, max_n=8, seed=2024)
IDS = [f"g{k}-n{G.n}" for k, G in enumerate(CORPUS)]


@lru_cache(maxsize=None)
def profile(k):
    """Spectrum plus a pool of eigenvectors: every binary one and a max-nodal witness per mu."""
    G = CORPUS[k]
    rep = spectrum(G)
    vectors = []
    for mu, sups in rep.entries:
        vectors += [(mu, binary_vector(G, A)) for A in sups]
        count, x = nu(G, mu)
        vectors.append((mu, x))
    return rep, vectors


def by_graph(test):
    return pytest.mark.parametrize("k", range(len(CORPUS)), ids=IDS)(test)


def scaled(x, c):
    return tuple(c * t for t in x)


def test_corpus_shape():
    assert len(CORPUS) >= 200 and max(G.n for G in CORPUS) == 8
    assert all(G.is_connected for G in CORPUS)


@by_graph
def test_zero_homogeneity(k):
    G = CORPUS[k]
    rep, vectors = profile(k)
    for mu, x in vectors:
        for c in (F(2), F(1, 3), F(-1), F(-5, 2)):
            assert is_eigenpair(G, mu, scaled(x, c))
    # a non-eigenvector keeps failing under scaling
    for A in connected_components(G, [v for v in G.vertices if v % 2]):
        if len(A) < G.n:
            x = binary_vector(G, A)
            verdict = bool(is_eigenpair(G, psi(G, A), x))
            for c in (F(3), F(-1, 4)):
                assert bool(is_eigenpair(G, psi(G, A), scaled(x, c))) == verdict


@by_graph
def test_rayleigh_identity(k):
    G = CORPUS[k]
    for mu, x in profile(k)[1]:
        assert energy_I(G, x) == mu * one_norm(G, x)


@by_graph
def test_nodal_restriction_closure(k):
    G = CORPUS[k]
    for mu, x in profile(k)[1]:
        if mu == 0:
            continue
        for sign in (1, -1):
            for D in connected_components(G, [v for v in G.vertices if sign * x[v - 1] > 0]):
                y = tuple(x[v - 1] if v in D else F(0) for v in G.vertices)
                assert is_eigenpair(G, mu, y)


@by_graph
def test_volume_bound_and_pi(k):
    G = CORPUS[k]
    for mu, x in profile(k)[1]:
        if mu == 0:
            continue
        x = normalize(G, x)
        sp = sign_pattern(G, x)
        assert 2 * sp.delta_plus <= G.volume and 2 * sp.delta_minus <= G.volume
        assert in_pi(G, x)


@by_graph
def test_spectral_gap_and_cheeger(k):
    G = CORPUS[k]
    values = spectrum(G).values
    positive = min(mu for mu in values if mu > 0)
    assert positive >= F(4, G.n ** 2 * (G.n - 1) ** 2)
    assert positive == cheeger_h(G)


@by_graph
def test_nodal_count_bounds(k):
    G = CORPUS[k]
    for mu in profile(k)[0].values:
        count = nu(G, mu)[0]
        assert k_way_cheeger(G, count) <= mu
        assert algebraic_multiplicity(G, mu)[0] >= count


@by_graph
def test_triangle_decomposition_reconstructs(k):
    G = CORPUS[k]
    for mu, x in profile(k)[1]:
        x = normalize(G, x)
        terms = triangle_decompose(G, mu, x)
        assert reconstruct(G, terms) == x
        assert sum(abs(t.coefficient) for t in terms) == 1


@settings(max_examples=40, deadline=None)
@given(connected_graphs(2, 7), st.fractions(min_value=F(-5), max_value=5).filter(bool))
def test_binary_eigenvectors_scale(G, c):
    for mu, sups in spectrum(G).entries:
        for A in sups:
            x = binary_vector(G, A)
            assert is_eigenpair(G, mu, scaled(x, c))
            assert energy_I(G, x) == mu * one_norm(G, x)

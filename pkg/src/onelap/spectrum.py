"""Complete 1-Laplacian spectra of small graphs.

Every positive eigenvalue has a binary eigenvector ``1_A / vol(A)`` with ``A``
connected and ``vol(A) <= vol(V) / 2``, and then the eigenvalue is
``|dA| / vol(A)``.  Enumerating those sets and testing each one exactly gives
the whole spectrum.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .eigen import binary_vector, is_eigenpair, lemma_important_check, lemma_minor_check
from .graph import (Graph, complete_graph, cycle_graph, enumerate_connected_subsets,
                    generate, path_graph, psi)

DEFAULT_CAP = 20


class CapExceeded(ValueError):
    pass


def check_cap(G: Graph, cap: int | None, default: int) -> None:
    cap = default if cap is None else cap
    if G.n > cap:
        raise CapExceeded(f"graph has {G.n} vertices, above the enumeration cap of {cap}")


def worker_count() -> int:
    raw = os.environ.get("ONELAP_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    vol: int
    entries: tuple  # ((mu, (support, ...)), ...) with mu strictly increasing

    @property
    def values(self) -> tuple:
        return tuple(mu for mu, _ in self.entries)

    def supports(self, mu) -> tuple:
        mu = Fraction(mu)
        for m, sups in self.entries:
            if m == mu:
                return sups
        raise KeyError(mu)

    def __contains__(self, mu):
        return Fraction(mu) in self.values


def _support_key(A):
    return (len(A), tuple(sorted(A)))


def _test_support(G: Graph, A: frozenset):
    mu = psi(G, A)
    if mu < 1 and lemma_minor_check(G, A):
        return None
    if len(A) == 2 and lemma_important_check(G, A):
        return mu
    return mu if is_eigenpair(G, mu, binary_vector(G, A)) else None


def _test_chunk(args):
    G, chunk = args
    return [_test_support(G, A) for A in chunk]


def binary_supports(G: Graph, workers: int | None = None) -> dict:
    """``{mu: [A, ...]}`` over connected A with vol(A) <= vol(V)/2 and mu > 0."""
    G.require_connected()
    if G.n < 2:
        return {}
    candidates = list(enumerate_connected_subsets(G, Fraction(G.volume, 2)))
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(candidates) > 2000:
        size = -(-len(candidates) // (4 * workers))
        chunks = [candidates[k:k + size] for k in range(0, len(candidates), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(itertools.chain.from_iterable(pool.map(_test_chunk, [(G, c) for c in chunks])))
    else:
        verdicts = [_test_support(G, A) for A in candidates]
    found = {}
    for A, mu in zip(candidates, verdicts):
        if mu is not None:
            found.setdefault(mu, []).append(A)
    for sups in found.values():
        sups.sort(key=_support_key)
    return found


def spectrum(G: Graph, cap: int | None = None, workers: int | None = None) -> SpectrumReport:
    check_cap(G, cap, DEFAULT_CAP)
    G.require_connected()
    if G.n < 2:
        raise ValueError("spectrum needs at least two vertices")
    found = binary_supports(G, workers)
    entries = [(Fraction(0), (frozenset(G.vertices),))]
    entries += [(mu, tuple(found[mu])) for mu in sorted(found)]
    return SpectrumReport(G.n, G.volume, tuple(entries))


def spectrum_closed_form(family: str, n: int) -> frozenset:
    F = Fraction
    if family == "path":
        if n < 2:
            raise ValueError("path graphs need n >= 2")
        odd = {F(1, 2 * k + 1) for k in range(n // 2)}
        even = {F(1, 2 * r) for r in range(1, (n - 2) // 4 + 1)}
        return frozenset({F(0)} | odd | even)
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle graphs need n >= 3")
        return frozenset({F(0)} | {F(1, r) for r in range(1, n // 2 + 1)})
    if family == "complete":
        if n < 2:
            raise ValueError("complete graphs need n >= 2")
        return frozenset({F(0)} | {F(n - k, n - 1) for k in range(1, n // 2 + 1)})
    raise ValueError(f"no closed form for family {family!r}")


# -- census ------------------------------------------------------------------

MAX_CENSUS_N = 6


@dataclass(frozen=True)
class CensusClass:
    graph: Graph
    code: int
    spectrum: tuple  # sorted distinct eigenvalues


def _pairs(n):
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def canonical_codes(n: int) -> np.ndarray:
    """Canonical code of every labelled graph on n vertices, indexed by its own code.

    A graph's code sets bit k when the k-th vertex pair (lexicographic) is an
    edge; the canonical code is the smallest code over all relabellings.
    """
    pairs = _pairs(n)
    m = len(pairs)
    codes = np.arange(1 << m, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(m)) & 1).astype(np.int64)
    pos = {p: k for k, p in enumerate(pairs)}
    best = codes.copy()
    for perm in itertools.permutations(range(n)):
        target = [pos[tuple(sorted((perm[a], perm[b])))] for a, b in pairs]
        weights = np.array([1 << t for t in target], dtype=np.int64)
        np.minimum(best, bits @ weights, out=best)
    return best


def graph_from_code(n: int, code: int) -> Graph:
    edges = [(a + 1, b + 1) for k, (a, b) in enumerate(_pairs(n)) if code >> k & 1]
    return Graph(n, frozenset(edges))


def census(max_n: int) -> dict:
    """``{n: [CensusClass, ...]}`` for every connected graph up to isomorphism."""
    if not 1 <= max_n <= MAX_CENSUS_N:
        raise ValueError(f"census supports 1 <= max_n <= {MAX_CENSUS_N}, got {max_n}")
    out = {1: [CensusClass(Graph(1), 0, (Fraction(0),))]}
    for n in range(2, max_n + 1):
        classes = []
        for code in sorted(set(canonical_codes(n).tolist())):
            G = graph_from_code(n, code)
            if G.is_connected:
                classes.append(CensusClass(G, code, spectrum(G).values))
        out[n] = classes
    return out


def max_distinct(classes) -> int:
    """The largest number of distinct eigenvalues among the given classes."""
    return max(len(c.spectrum) for c in classes)


def family_graph(family: str, n: int) -> Graph:
    return {"path": path_graph, "cycle": cycle_graph, "complete": complete_graph}[family](n) \
        if family in ("path", "cycle", "complete") else generate(family, n)

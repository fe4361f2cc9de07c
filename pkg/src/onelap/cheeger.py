"""Cheeger constants, optimal Cheeger cuts and bounds on minimax values c_k."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .eigen import binary_vector, is_eigenpair
from .graph import Graph, enumerate_connected_subsets, psi
from .lp import OPTIMAL, linprog_exact
from .multiplicity import rank
from .spectrum import DEFAULT_CAP, check_cap, spectrum


def _subset_tables(G: Graph):
    """Boundary size and volume of every vertex subset, indexed by bitmask."""
    masks = np.arange(1 << G.n, dtype=np.int64)
    bnd = np.zeros(len(masks), dtype=np.int64)
    vol = np.zeros(len(masks), dtype=np.int64)
    for i, j in G.edges:
        bnd += ((masks >> (i - 1)) ^ (masks >> (j - 1))) & 1
    for v in G.vertices:
        vol += ((masks >> (v - 1)) & 1) * G.degrees[v - 1]
    return masks, bnd, vol


def _mask_to_set(mask: int) -> frozenset:
    return frozenset(k + 1 for k in range(mask.bit_length()) if mask >> k & 1)


def _exact_min(num, den, idx):
    return min(Fraction(int(num[k]), int(den[k])) for k in idx)


def cheeger_h(G: Graph, cap: int | None = None) -> Fraction:
    """min over proper nonempty S of |dS| / min(vol S, vol S^c)."""
    check_cap(G, cap, DEFAULT_CAP)
    G.require_connected()
    if G.n < 2:
        raise ValueError("cheeger_h needs at least two vertices")
    masks, bnd, vol = _subset_tables(G)
    # by symmetry only subsets missing the last vertex are needed
    keep = (masks > 0) & (masks < (1 << (G.n - 1)))
    den = np.minimum(vol, G.volume - vol)[keep]
    num = bnd[keep]
    ratio = num / den
    # distinct ratios differ by at least 1/vol^2, far above float error
    near = np.nonzero(ratio <= ratio.min() + 1e-12)[0]
    return _exact_min(num, den, near)


def k_way_cheeger(G: Graph, k: int, cap: int | None = None) -> Fraction:
    """min over k pairwise disjoint nonempty S_1..S_k of max psi(S_i).

    Only connected sets are needed: a disconnected set can be swapped for its
    component of smallest ratio without raising the maximum.
    """
    check_cap(G, cap, DEFAULT_CAP)
    G.require_connected()
    if not 1 <= k <= G.n:
        raise ValueError(f"k must lie in 1..{G.n}, got {k}")
    scored = []
    for S in enumerate_connected_subsets(G):
        mask = sum(1 << (v - 1) for v in S)
        scored.append((psi(G, S), min(S), mask))
    thresholds = sorted({s for s, _, _ in scored})

    def packable(t):
        by_min = [[] for _ in range(G.n + 1)]
        for s, lo, mask in scored:
            if s <= t:
                by_min[lo].append(mask)

        @lru_cache(maxsize=None)
        def go(v, used, need):
            if need == 0:
                return True
            if v > G.n or G.n - v + 1 < need:
                return False
            if not used >> (v - 1) & 1:
                for mask in by_min[v]:
                    if not mask & used and go(v + 1, used | mask, need - 1):
                        return True
            return go(v + 1, used, need)

        return go(1, 0, k)

    lo, hi = 0, len(thresholds) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if packable(thresholds[mid]):
            hi = mid
        else:
            lo = mid + 1
    return thresholds[lo]


@dataclass(frozen=True)
class CutReport:
    h_value: Fraction
    cuts: tuple  # ((support, delta_zero), ...) every binary eigenvector at h
    optimal: tuple  # the supports with the smallest delta_zero
    delta_zero: int

    def null_set(self, G: Graph, support) -> frozenset:
        return frozenset(G.vertices) - frozenset(support)


def optimal_cheeger_cut(G: Graph, cap: int | None = None) -> CutReport:
    check_cap(G, cap, DEFAULT_CAP)
    h = cheeger_h(G, cap)
    masks, bnd, vol = _subset_tables(G)
    # psi(A) = h  <=>  |dA| * den(h) == vol(A) * num(h); a binary vector can
    # only be an eigenvector at its own ratio, so this filter is exact
    hit = (masks > 0) & (2 * vol <= G.volume) & (bnd * h.denominator == vol * h.numerator)
    cuts = []
    for mask in np.nonzero(hit)[0].tolist():
        A = _mask_to_set(mask)
        if is_eigenpair(G, h, binary_vector(G, A)):
            cuts.append((A, G.volume - int(vol[mask])))
    cuts.sort(key=lambda c: (c[1], len(c[0]), sorted(c[0])))
    best = cuts[0][1]
    optimal = tuple(A for A, d in cuts if d == best)
    return CutReport(h, tuple(cuts), optimal, best)


# -- subspace lower bounds ---------------------------------------------------

def _exact(v) -> Fraction:
    # floats go through their shortest repr so 0.9392 becomes 9392/10000
    if isinstance(v, float):
        return Fraction(repr(v))
    return Fraction(v)


def min_I_on_subspace(G: Graph, basis) -> Fraction:
    """Exact infimum of I over span(basis) intersected with the unit sphere X.

    One LP per sign orthant (x_1 >= 0 by the symmetry x -> -x): write
    x_i = s_i w_i with w >= 0, x = B a, sum d_i w_i = 1, and linearise |x_i - x_j|.
    """
    G.require_connected()
    B = [[_exact(t) for t in b] for b in basis]
    if not B:
        raise ValueError("basis is empty")
    if any(len(b) != G.n for b in B):
        raise ValueError(f"basis vectors must have {G.n} entries")
    if rank(B) != len(B):
        raise ValueError("basis vectors are linearly dependent")
    n, m = G.n, len(B)
    best = None
    for tail in itertools.product((1, -1), repeat=n - 1):
        s = (1,) + tail
        same = [(i, j) for i, j in G.sorted_edges if s[i - 1] == s[j - 1]]
        # columns: w (n) | a+ (m) | a- (m) | p, q per same-sign edge
        width = n + 2 * m + 2 * len(same)
        A_eq, b_eq = [], []
        for i in range(n):
            row = [Fraction(0)] * width
            row[i] = Fraction(s[i])
            for k in range(m):
                row[n + k] = -B[k][i]
                row[n + m + k] = B[k][i]
            A_eq.append(row)
            b_eq.append(0)
        row = [Fraction(0)] * width
        for i in range(n):
            row[i] = Fraction(G.degrees[i])
        A_eq.append(row)
        b_eq.append(1)
        cost = [Fraction(0)] * width
        col = n + 2 * m
        for i, j in G.sorted_edges:
            if s[i - 1] != s[j - 1]:
                cost[i - 1] += 1
                cost[j - 1] += 1
        for i, j in same:
            row = [Fraction(0)] * width
            row[i - 1], row[j - 1] = Fraction(1), Fraction(-1)
            row[col], row[col + 1] = Fraction(-1), Fraction(1)
            cost[col] = cost[col + 1] = Fraction(1)
            A_eq.append(row)
            b_eq.append(0)
            col += 2
        res = linprog_exact(cost, A_eq, b_eq)
        if res.status == OPTIMAL and (best is None or res.value < best):
            best = res.value
    if best is None:
        raise ValueError("span does not meet the unit sphere")
    return best


@dataclass(frozen=True)
class CkBounds:
    k: int
    lower: Fraction
    upper: Fraction
    candidates: tuple  # eigenvalues in [lower, upper]
    resolved: Fraction | None


def ck_bounds(G: Graph, k: int, lower_bases=None, cap: int | None = None) -> CkBounds:
    """Sandwich c_k between subspace lower bounds and h_k.

    c_k is an eigenvalue, c_1 = 0, c_2 = h_2 and c_k is nondecreasing in k, so
    the candidate set is the spectrum restricted to the closed interval.
    """
    check_cap(G, cap, DEFAULT_CAP)
    if not 1 <= k <= G.n:
        raise ValueError(f"k must lie in 1..{G.n}, got {k}")
    upper = k_way_cheeger(G, k, cap)
    h2 = k_way_cheeger(G, 2, cap) if G.n >= 2 else Fraction(0)
    lower = Fraction(0)
    for basis in lower_bases or ():
        if len(basis) < G.n + 1 - k:
            raise ValueError(f"basis of dimension {len(basis)} is below n + 1 - k = {G.n + 1 - k}")
        lower = max(lower, min_I_on_subspace(G, basis))
    if k >= 2:
        lower = max(lower, h2)
    if k == 1:
        return CkBounds(1, Fraction(0), upper, (Fraction(0),), Fraction(0))
    if k == 2:
        return CkBounds(2, h2, h2, (h2,), h2)
    cands = tuple(mu for mu in spectrum(G, cap).values if lower <= mu <= upper)
    return CkBounds(k, lower, upper, cands, cands[0] if len(cands) == 1 else None)


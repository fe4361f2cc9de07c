"""Slow, independent reference implementations used only by the tests.

Nothing here imports the feasibility engine, the connected-subset enumerator
or the simplex code; each oracle takes a different route to the same answer.
"""

import itertools
from fractions import Fraction

import networkx as nx


def to_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(1, G.n + 1))
    g.add_edges_from(G.edges)
    return g


def naive_connected_subsets(G, cap):
    g = to_nx(G)
    deg = dict(g.degree())
    out = []
    for r in range(1, G.n + 1):
        for S in itertools.combinations(range(1, G.n + 1), r):
            if sum(deg[v] for v in S) <= cap and nx.is_connected(g.subgraph(S)):
                out.append(frozenset(S))
    return out


def boundary(G, S):
    return sum((i in S) != (j in S) for i, j in G.edges)


def volume(G, S):
    return sum(G.degrees[v - 1] for v in S)


# -- Fourier-Motzkin ---------------------------------------------------------

def _tighten(rows):
    best = {}
    for a, b in rows:
        piv = next((abs(t) for t in a if t), None)
        if piv:
            a, b = tuple(t / piv for t in a), b / piv
        if a not in best or b < best[a]:
            best[a] = b
    return list(best.items())


def fm_feasible(rows, nvars):
    """Feasibility of {a . z <= b} by Fourier-Motzkin elimination (exact)."""
    rows = _tighten((tuple(Fraction(t) for t in a), Fraction(b)) for a, b in rows)
    left = set(range(nvars))
    while left:
        # eliminate the variable producing the fewest new rows
        k = min(left, key=lambda j: sum(a[j] > 0 for a, _ in rows) * sum(a[j] < 0 for a, _ in rows))
        left.discard(k)
        pos = [(a, b) for a, b in rows if a[k] > 0]
        neg = [(a, b) for a, b in rows if a[k] < 0]
        new = [(a, b) for a, b in rows if a[k] == 0]
        for ap, bp in pos:
            for an, bn in neg:
                lp, ln = -an[k], ap[k]
                new.append((tuple(lp * x + ln * y for x, y in zip(ap, an)), lp * bp + ln * bn))
        rows = _tighten(new)
        if any(not any(a) and b < 0 for a, b in rows):
            return False
    return all(b >= 0 for a, b in rows if not any(a))


def fm_system(edges, rows_spec):
    """Build inequalities for boxes ``{e: (lo, hi)}`` and vertex bounds ``{v: (L, U)}``.

    Fixed variables (lo == hi) are substituted out first.
    """
    free = [e for e, (lo, hi) in edges.items() if lo != hi]
    fixed = {e: lo for e, (lo, hi) in edges.items() if lo == hi}
    idx = {e: k for k, e in enumerate(free)}
    n = len(free)
    ineq = []
    for e in free:
        lo, hi = edges[e]
        a = [0] * n
        a[idx[e]] = 1
        ineq.append((a, hi))
        ineq.append(([-t for t in a], -lo))
    for v, (L, U) in rows_spec.items():
        a = [0] * n
        const = Fraction(0)
        for (i, j) in edges:
            s = 1 if i == v else -1 if j == v else 0
            if not s:
                continue
            if (i, j) in idx:
                a[idx[(i, j)]] += s
            else:
                const += s * fixed[(i, j)]
        ineq.append((a, U - const))
        ineq.append(([-t for t in a], -(L - const)))
    return ineq, n


def eigen_boxes(G, mu, x):
    mu = Fraction(mu)
    edges = {}
    for i, j in G.edges:
        d = x[i - 1] - x[j - 1]
        s = (d > 0) - (d < 0)
        edges[(i, j)] = (s, s) if s else (-1, 1)
    rows = {}
    for v in range(1, G.n + 1):
        d = G.degrees[v - 1]
        s = (x[v - 1] > 0) - (x[v - 1] < 0)
        rows[v] = (mu * d * s, mu * d * s) if s else (-mu * d, mu * d)
    return edges, rows


def fm_is_eigenpair(G, mu, x, max_free=None):
    """FM verdict, or None when more than ``max_free`` variables are free."""
    edges, rows = eigen_boxes(G, mu, x)
    ineq, n = fm_system(edges, rows)
    if max_free is not None and n > max_free:
        return None
    return fm_feasible(ineq, n)


def brute_spectrum(G):
    """{0} plus psi(A) for every subset A whose 1_A/vol(A) passes the FM oracle."""
    values = {Fraction(0)}
    for r in range(1, G.n):
        for A in itertools.combinations(range(1, G.n + 1), r):
            A = frozenset(A)
            mu = Fraction(boundary(G, A), volume(G, A))
            if mu in values:
                continue
            x = [Fraction(1, volume(G, A)) if v in A else Fraction(0) for v in range(1, G.n + 1)]
            if fm_is_eigenpair(G, mu, x):
                values.add(mu)
    return values


# -- Cheeger -----------------------------------------------------------------

def brute_cheeger(G):
    best = None
    total = 2 * len(G.edges)
    for r in range(1, G.n):
        for S in itertools.combinations(range(1, G.n + 1), r):
            vol = volume(G, S)
            val = Fraction(boundary(G, S), min(vol, total - vol))
            best = val if best is None else min(best, val)
    return best


def brute_hk(G, k):
    """Assign every vertex a label in 0..k (0 = unused) and take the best family."""
    best = None
    for labels in itertools.product(range(k + 1), repeat=G.n):
        sets = [frozenset(v + 1 for v in range(G.n) if labels[v] == c) for c in range(1, k + 1)]
        if any(not S for S in sets):
            continue
        val = max(Fraction(boundary(G, S), volume(G, S)) for S in sets)
        best = val if best is None else min(best, val)
    return best

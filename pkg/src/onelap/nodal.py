"""Nodal domains, the maximal nodal count nu(mu, G), and max-nodal constructions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .eigen import as_vector, is_eigenpair, normalize, ternary_vector
from .graph import Graph, connected_components, cycle_graph, path_graph
from .spectrum import binary_supports, check_cap, spectrum, spectrum_closed_form

NU_CAP = 12


@dataclass(frozen=True)
class NodalDecomposition:
    positive: tuple  # domains as sorted vertex tuples
    negative: tuple
    null: frozenset
    weak: int

    @property
    def r_plus(self) -> int:
        return len(self.positive)

    @property
    def r_minus(self) -> int:
        return len(self.negative)

    @property
    def strong(self) -> int:
        return len(self.positive) + len(self.negative)

    @property
    def S(self) -> int:
        return self.strong

    @property
    def W(self) -> int:
        return self.weak


def _nonzero(G, x):
    x = as_vector(G, x)
    if not any(x):
        raise ValueError("nodal domains of the zero function are undefined")
    return x


def weak_count(G: Graph, x) -> int:
    """Components of {x >= 0} holding a positive vertex plus those of {x <= 0} holding a negative one."""
    x = _nonzero(G, x)
    count = 0
    for sign in (1, -1):
        closed = [v for v in G.vertices if sign * x[v - 1] >= 0]
        count += sum(any(sign * x[v - 1] > 0 for v in comp)
                     for comp in connected_components(G, closed))
    return count


def strong_count(G: Graph, x) -> NodalDecomposition:
    x = _nonzero(G, x)
    pos = [v for v in G.vertices if x[v - 1] > 0]
    neg = [v for v in G.vertices if x[v - 1] < 0]
    null = frozenset(v for v in G.vertices if x[v - 1] == 0)
    return NodalDecomposition(tuple(connected_components(G, pos)),
                              tuple(connected_components(G, neg)), null, weak_count(G, x))


# -- nu ----------------------------------------------------------------------

def _touches(G, A, B):
    return any(G.adjacency[v] & B for v in A)


def _nu_from_supports(G, mu):
    """Largest family of eigen-supports at mu that glues into one ternary eigenvector.

    Every nodal domain of an eigenvector is itself a connected eigen-support at
    mu, so candidates are disjoint families of supports with signs such that
    equal-signed members are non-adjacent (otherwise they would merge).
    """
    sups = list(binary_supports(G).get(mu, []))
    families = []

    def grow(start, fam, used):
        families.append(tuple(fam))
        for k in range(start, len(sups)):
            if not sups[k] & used:
                grow(k + 1, fam + [k], used | sups[k])

    grow(0, [], frozenset())
    families.sort(key=lambda f: (-len(f), f))
    for fam in families:
        if not fam:
            continue
        members = [sups[k] for k in fam]
        # fix the first member positive (global sign symmetry)
        for tail in itertools.product((1, -1), repeat=len(members) - 1):
            signs = (1,) + tail
            if any(signs[a] == signs[b] and _touches(G, members[a], members[b])
                   for a, b in itertools.combinations(range(len(members)), 2)):
                continue
            P = frozenset().union(*(m for m, s in zip(members, signs) if s > 0))
            N = frozenset().union(*(m for m, s in zip(members, signs) if s < 0))
            x = ternary_vector(G, P, N)
            if is_eigenpair(G, mu, x):
                return len(members), x
    raise AssertionError("no eigen-support found for an eigenvalue")


def _nu_exhaustive(G, mu):
    """Scan all ternary patterns with the first nonzero vertex positive."""
    half = Fraction(G.volume, 2)
    deg = G.degrees
    best = (0, None)
    for pattern in itertools.product((0, 1, -1), repeat=G.n):
        first = next((s for s in pattern if s), 0)
        if first != 1:
            continue
        dp = sum(d for d, s in zip(deg, pattern) if s > 0)
        dm = sum(d for d, s in zip(deg, pattern) if s < 0)
        d0 = G.volume - dp - dm
        if mu > 0 and (dp > half or dm > half or abs(dp - dm) > d0):
            continue
        # Rayleigh identity is necessary: I(x) = mu * ||x||
        jump = sum(abs(pattern[i - 1] - pattern[j - 1]) for i, j in G.edges)
        if jump != mu * (dp + dm):
            continue
        P = [v for v in G.vertices if pattern[v - 1] > 0]
        N = [v for v in G.vertices if pattern[v - 1] < 0]
        S = len(connected_components(G, P)) + len(connected_components(G, N))
        if S <= best[0]:
            continue
        x = ternary_vector(G, P, N)
        if is_eigenpair(G, mu, x):
            best = (S, x)
    return best


def nu(G: Graph, mu, cap: int | None = None, method: str = "supports") -> tuple:
    """``(nu, witness)``: the largest strong nodal count of an eigenvector at mu."""
    check_cap(G, cap, NU_CAP)
    G.require_connected()
    mu = Fraction(mu)
    if mu not in spectrum(G):
        raise ValueError(f"{mu} is not an eigenvalue of this graph")
    if mu == 0:
        return 1, normalize(G, [1] * G.n)
    if method == "supports":
        return _nu_from_supports(G, mu)
    if method == "exhaustive":
        return _nu_exhaustive(G, mu)
    raise ValueError(f"unknown method {method!r}")


def _path_mu(mu):
    """Return ('odd', r) for 1/(2r+1) or ('even', r) for 1/(2r)."""
    if mu <= 0 or mu.numerator != 1:
        return None, None
    q = mu.denominator
    return ("odd", (q - 1) // 2) if q % 2 else ("even", q // 2)


def nu_closed_form(family: str, n: int, mu) -> int:
    mu = Fraction(mu)
    if mu not in spectrum_closed_form(family, n):
        raise ValueError(f"{mu} is not in the spectrum of the {family} graph of order {n}")
    if mu == 0:
        return 1
    if family == "path":
        kind, r = _path_mu(mu)
        if kind == "odd":
            return (n + 2 * r) // (2 * r + 1)
        return (n - 2) // (2 * r) - 1
    if family == "cycle":
        r = mu.denominator
        return 2 * (n // (2 * r))
    return 2


def build_max_nodal(family: str, n: int, mu) -> tuple:
    """A normalized eigenvector of P_n or C_n at mu with the maximal nodal count."""
    mu = Fraction(mu)
    if family not in ("path", "cycle"):
        raise ValueError("build_max_nodal supports the path and cycle families")
    if mu == 0 or mu not in spectrum_closed_form(family, n):
        raise ValueError(f"{mu} is not a positive eigenvalue of the {family} graph of order {n}")
    blocks = []  # (length, sign) with sign 0 for a null run
    if family == "path":
        kind, r = _path_mu(mu)
        k = nu_closed_form("path", n, mu)
        if kind == "odd":
            lengths = [r + 1] + [2 * r + 1] * (k - 2)
            blocks = [(ln, (-1) ** b) for b, ln in enumerate(lengths)]
            blocks.append((n + 2 * r - (2 * r + 1) * k, 0))
            blocks.append((r + 1, (-1) ** (k - 1)))
        else:
            blocks = [(r + 1, 0)] + [(2 * r, (-1) ** b) for b in range(k)]
            blocks.append((n - (r + 1) - 2 * r * k, 0))
        G = path_graph(n)
    else:
        r = mu.denominator
        k = nu_closed_form("cycle", n, mu)
        blocks = [(r, (-1) ** b) for b in range(k)] + [(n - r * k, 0)]
        G = cycle_graph(n)
    x = []
    for length, sign in blocks:
        x += [sign] * length
    assert len(x) == n
    return normalize(G, x)

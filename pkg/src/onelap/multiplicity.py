"""Algebraic multiplicity and the level-set decomposition of eigenvectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eigen import as_vector, binary_vector, is_eigenpair, one_norm
from .graph import Graph, connected_components


def rank(rows) -> int:
    """Exact rank of a rational matrix by Gaussian elimination."""
    M = [[Fraction(t) for t in row] for row in rows]
    r = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((k for k in range(r, len(M)) if M[k][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for k in range(r + 1, len(M)):
            f = M[k][c] / p
            if f:
                M[k] = [a - f * b for a, b in zip(M[k], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def indicator(G: Graph, A) -> list:
    return [1 if v in A else 0 for v in G.vertices]


@dataclass(frozen=True)
class FundamentalSystem:
    mu: Fraction
    members: tuple  # supports A, each 1_A / vol(A) an eigenvector at mu
    rank: int


def eigen_supports(G: Graph, mu) -> list:
    """Connected supports of binary eigenvectors at ``mu`` in canonical order."""
    from .spectrum import binary_supports

    mu = Fraction(mu)
    if mu == 0:
        return [frozenset(G.vertices)]
    return list(binary_supports(G).get(mu, []))


def algebraic_multiplicity(G: Graph, mu) -> tuple:
    """``(am, system)``: rank of the binary eigenvectors at mu and a basis of them."""
    G.require_connected()
    mu = Fraction(mu)
    supports = eigen_supports(G, mu)
    if not supports:
        raise ValueError(f"{mu} is not an eigenvalue of this graph")
    chosen, rows = [], []
    for A in supports:
        trial = rows + [indicator(G, A)]
        if rank(trial) == len(trial):
            rows = trial
            chosen.append(A)
    return len(chosen), FundamentalSystem(mu, tuple(chosen), len(chosen))


@dataclass(frozen=True)
class Term:
    sign: int
    coefficient: Fraction
    support: frozenset


def triangle_decompose(G: Graph, mu, x) -> list:
    """Write an eigenvector as a signed convex combination of binary ones.

    Inside each nodal domain the superlevel sets {|x_j| >= t} at the distinct
    levels give the pieces; the weight of a piece is (t_s - t_{s-1}) vol(piece).
    """
    mu = Fraction(mu)
    x = as_vector(G, x)
    if one_norm(G, x) != 1:
        raise ValueError("triangle_decompose expects a normalized vector")
    if not is_eigenpair(G, mu, x):
        raise ValueError(f"x is not an eigenvector at mu = {mu}")
    pos = [v for v in G.vertices if x[v - 1] > 0]
    neg = [v for v in G.vertices if x[v - 1] < 0]
    domains = [(1, D) for D in connected_components(G, pos)] + \
              [(-1, D) for D in connected_components(G, neg)]
    domains.sort(key=lambda sd: sd[1])
    terms = []
    for sign, D in domains:
        levels = sorted({abs(x[v - 1]) for v in D})
        prev = Fraction(0)
        for t in levels:
            piece = frozenset(v for v in D if abs(x[v - 1]) >= t)
            vol = sum(G.degrees[v - 1] for v in piece)
            terms.append(Term(sign, (t - prev) * vol, piece))
            prev = t
    for term in terms:
        if not is_eigenpair(G, mu, binary_vector(G, term.support)):
            raise ArithmeticError(f"level set {sorted(term.support)} is not an eigenvector")
    return terms


def reconstruct(G: Graph, terms) -> tuple:
    out = [Fraction(0)] * G.n
    for term in terms:
        b = binary_vector(G, term.support)
        for k in range(G.n):
            out[k] += term.sign * term.coefficient * b[k]
    return tuple(out)

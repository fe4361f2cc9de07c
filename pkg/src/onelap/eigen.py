"""Vertex functions, the energy I, sign patterns and eigenpair verification.

A vertex function is stored as a tuple of Fractions, entry ``v - 1`` holding
the value at vertex ``v``.  Public functions accept any sequence or a
``{vertex: value}`` mapping and convert with :func:`as_vector`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .feasibility import EdgeVariableSystem, Equal, Interval, solve
from .graph import Graph, edge_boundary, psi, subset_volume


def _sign(t) -> int:
    return (t > 0) - (t < 0)


def as_vector(G: Graph, x) -> tuple:
    if isinstance(x, dict):
        for v in x:
            if not 1 <= v <= G.n:
                raise ValueError(f"vertex {v} not in graph")
        return tuple(Fraction(x.get(v, 0)) for v in G.vertices)
    x = tuple(Fraction(t) for t in x)
    if len(x) != G.n:
        raise ValueError(f"vertex function has {len(x)} entries, graph has {G.n} vertices")
    return x


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def load_vertex_function(text: str, n: int) -> tuple:
    """Parse lines ``v p/q``; unspecified vertices are 0."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'v p/q', got {line!r}")
        try:
            v = int(parts[0])
        except ValueError:
            raise ValueError(f"line {lineno}: bad vertex {parts[0]!r}") from None
        if not 1 <= v <= n:
            raise ValueError(f"line {lineno}: vertex {v} out of range 1..{n}")
        if v in values:
            raise ValueError(f"line {lineno}: vertex {v} given twice")
        try:
            values[v] = parse_rational(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return tuple(values.get(v, Fraction(0)) for v in range(1, n + 1))


def dump_vertex_function(x) -> str:
    return "".join(f"{v} {format_rational(t)}\n" for v, t in enumerate(x, start=1))


# -- energy and norm ---------------------------------------------------------

def energy_I(G: Graph, x) -> Fraction:
    x = as_vector(G, x)
    return sum((abs(x[i - 1] - x[j - 1]) for i, j in G.edges), Fraction(0))


def one_norm(G: Graph, x) -> Fraction:
    x = as_vector(G, x)
    return sum((d * abs(t) for d, t in zip(G.degrees, x)), Fraction(0))


def normalize(G: Graph, x) -> tuple:
    x = as_vector(G, x)
    norm = one_norm(G, x)
    if norm == 0:
        raise ValueError("cannot normalize the zero function")
    return tuple(t / norm for t in x)


def binary_vector(G: Graph, A: Iterable) -> tuple:
    A = frozenset(A)
    if not A:
        raise ValueError("binary_vector needs a nonempty set")
    vol = subset_volume(G, A)
    if vol == 0:
        raise ValueError("binary_vector needs a set of positive volume")
    r = Fraction(1, vol)
    return tuple(r if v in A else Fraction(0) for v in G.vertices)


def ternary_vector(G: Graph, P: Iterable, N: Iterable) -> tuple:
    P, N = frozenset(P), frozenset(N)
    if P & N:
        raise ValueError(f"positive and negative sets overlap in {sorted(P & N)}")
    if not P and not N:
        raise ValueError("ternary_vector needs a nonempty support")
    r = Fraction(1, subset_volume(G, P) + subset_volume(G, N))
    return tuple(r if v in P else -r if v in N else Fraction(0) for v in G.vertices)


# -- sign patterns -----------------------------------------------------------

@dataclass(frozen=True)
class SignPattern:
    positive: frozenset
    negative: frozenset
    null: frozenset
    delta_plus: int
    delta_minus: int
    delta_zero: int


def sign_pattern(G: Graph, x) -> SignPattern:
    x = as_vector(G, x)
    pos = frozenset(v for v in G.vertices if x[v - 1] > 0)
    neg = frozenset(v for v in G.vertices if x[v - 1] < 0)
    null = frozenset(G.vertices) - pos - neg
    return SignPattern(pos, neg, null, subset_volume(G, pos), subset_volume(G, neg),
                       subset_volume(G, null))


def in_pi(G: Graph, x) -> bool:
    """|delta+ - delta-| <= delta0 for a function on the unit sphere."""
    if one_norm(G, x) != 1:
        raise ValueError("in_pi expects a normalized function (one_norm == 1)")
    sp = sign_pattern(G, x)
    return abs(sp.delta_plus - sp.delta_minus) <= sp.delta_zero


# -- eigenpairs --------------------------------------------------------------

@dataclass(frozen=True)
class EigenCertificate:
    mu: Fraction
    witness: dict  # canonical edge (i, j), i < j  ->  z_ij

    def z(self, i: int, j: int) -> Fraction:
        return self.witness[(i, j)] if i < j else -self.witness[(j, i)]


def edge_box(xi, xj):
    s = _sign(xi - xj)
    return (s, s) if s else (-1, 1)


def eigen_system(G: Graph, mu, x, constrained: Iterable | None = None) -> EdgeVariableSystem:
    """The inclusion system for ``(mu, x)``; vertex rows only for ``constrained``."""
    mu = Fraction(mu)
    edges = {(i, j): edge_box(x[i - 1], x[j - 1]) for i, j in G.sorted_edges}
    rows = {}
    for v in (G.vertices if constrained is None else constrained):
        d = G.degrees[v - 1]
        s = _sign(x[v - 1])
        rows[v] = Equal(mu * d * s) if s else Interval(-mu * d, mu * d)
    return EdgeVariableSystem(edges, rows)


def is_eigenpair(G: Graph, mu, x) -> EigenCertificate | None:
    """Certificate if ``(mu, x)`` solves the 1-Laplacian inclusion, else None."""
    G.require_connected()
    mu = Fraction(mu)
    if not 0 <= mu <= 1:
        raise ValueError(f"mu must lie in [0, 1], got {mu}")
    x = as_vector(G, x)
    if not any(x):
        raise ValueError("the zero function is never an eigenvector")
    res = solve(eigen_system(G, mu, x))
    return EigenCertificate(mu, res.witness) if res else None


def is_binary_eigenvector(G: Graph, A: Iterable) -> EigenCertificate | None:
    A = frozenset(A)
    return is_eigenpair(G, psi(G, A), binary_vector(G, A))


def lemma_minor_check(G: Graph, A: Iterable) -> bool:
    """True when an outside vertex has all its neighbours inside ``A``.

    Such a set cannot carry a binary eigenvector for any mu < 1.
    """
    A = frozenset(A)
    if not A or len(A) >= G.n:
        raise ValueError("lemma_minor_check needs a proper nonempty subset")
    return any(G.adjacency[i] <= A for i in G.vertices if i not in A)


def lemma_important_check(G: Graph, A: Iterable) -> bool:
    """Sufficient test for an adjacent pair ``A`` to carry a binary eigenvector."""
    A = frozenset(A)
    if len(A) != 2:
        raise ValueError("lemma_important_check needs exactly two vertices")
    a, b = sorted(A)
    if not G.has_edge(a, b):
        raise ValueError(f"vertices {a} and {b} are not adjacent")
    ratio = Fraction(edge_boundary(G, A), subset_volume(G, A))
    for i in G.vertices:
        if i in A:
            continue
        if Fraction(len(G.adjacency[i] & A), G.degrees[i - 1]) > ratio:
            return False
    return True

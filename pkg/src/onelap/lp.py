"""A small exact two-phase simplex over the rationals.

Solves ``min c.x  s.t.  A x = b, x >= 0`` with Fraction arithmetic and Bland's
rule, so it always terminates and the optimum is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


@dataclass
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple | None = None


def _pivot(T, basis, r, c):
    row = T[r]
    p = row[c]
    if p != 1:
        T[r] = row = [v / p for v in row]
    for k, other in enumerate(T):
        if k != r:
            f = other[c]
            if f:
                T[k] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _run(T, basis, ncols):
    """Minimise the objective held in the last row (reduced costs, -value in rhs)."""
    obj = T[-1]
    while True:
        obj = T[-1]
        entering = next((j for j in range(ncols) if obj[j] < 0), None)
        if entering is None:
            return True
        best = None
        for r in range(len(T) - 1):
            a = T[r][entering]
            if a > 0:
                ratio = T[r][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            return False
        _pivot(T, basis, best[1], entering)


def linprog_exact(c, A_eq, b_eq) -> LPResult:
    c = [Fraction(v) for v in c]
    n = len(c)
    rows = []
    for a, b in zip(A_eq, b_eq):
        a = [Fraction(v) for v in a]
        b = Fraction(b)
        if len(a) != n:
            raise ValueError("constraint row length does not match the objective")
        if b < 0:
            a, b = [-v for v in a], -b
        rows.append(a + [b])
    m = len(rows)

    # phase one: artificial column per row, minimise their sum
    T = [row[:n] + [Fraction(int(k == r)) for k in range(m)] + [row[n]] for r, row in enumerate(rows)]
    basis = [n + r for r in range(m)]
    phase1 = [Fraction(0)] * (n + m + 1)
    for row in T:
        for j in range(n):
            phase1[j] -= row[j]
        phase1[-1] -= row[-1]
    T.append(phase1)
    _run(T, basis, n + m)
    if T[-1][-1] != 0:
        return LPResult(INFEASIBLE)

    # drive leftover artificials out of the basis, dropping redundant rows
    r = 0
    while r < len(T) - 1:
        if basis[r] >= n:
            col = next((j for j in range(n) if T[r][j] != 0), None)
            if col is None:
                del T[r]
                del basis[r]
                continue
            _pivot(T, basis, r, col)
        r += 1

    T = [row[:n] + [row[-1]] for row in T[:-1]]
    obj = c + [Fraction(0)]
    for r, j in enumerate(basis):
        if obj[j]:
            f = obj[j]
            obj = [a - f * b for a, b in zip(obj, T[r])]
    T.append(obj)
    if not _run(T, basis, n):
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for r, j in enumerate(basis):
        x[j] = T[r][-1]
    return LPResult(OPTIMAL, -T[-1][-1], tuple(x))

"""Exact feasibility for box-constrained edge-sum systems.

Every edge ``e = (i, j)`` carries a variable ``z_e`` in a rational box
``[lo, hi]``.  Each constrained vertex ``v`` restricts its signed incident sum

    s_v = sum(z_e for e = (v, *)) - sum(z_e for e = (*, v))

to a value (``Equal``) or an interval (``Interval``).  Unconstrained vertices
put no restriction on ``s_v``.

Such a system is a circulation problem: an edge is an arc ``i -> j`` with flow
``z_e``, and an extra hub node feeds each vertex through an arc carrying
``s_v``.  Lower bounds are shifted out, everything is scaled to integers, and
a single max-flow run (Dinic) decides feasibility exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm


@dataclass(frozen=True)
class Equal:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    @property
    def bounds(self):
        return self.value, self.value


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def bounds(self):
        return self.lo, self.hi


@dataclass
class EdgeVariableSystem:
    """``edges`` maps an oriented pair ``(i, j)`` to its box ``(lo, hi)``."""

    edges: dict = field(default_factory=dict)
    vertex_constraints: dict = field(default_factory=dict)

    def __post_init__(self):
        boxes = {}
        for e, (lo, hi) in self.edges.items():
            i, j = e
            if i == j:
                raise ValueError(f"edge {e} is a loop")
            lo, hi = Fraction(lo), Fraction(hi)
            if lo > hi:
                raise ValueError(f"malformed box for edge {e}: lo={lo} > hi={hi}")
            if (j, i) in boxes:
                raise ValueError(f"edge {e} given in both orientations")
            boxes[(i, j)] = (lo, hi)
        self.edges = boxes
        for v, c in self.vertex_constraints.items():
            if not isinstance(c, (Equal, Interval)):
                raise TypeError(f"constraint for vertex {v} must be Equal or Interval")

    def vertices(self) -> list:
        vs = set(self.vertex_constraints)
        for i, j in self.edges:
            vs.add(i)
            vs.add(j)
        return sorted(vs)

    def incident_sum(self, z: dict, v) -> Fraction:
        total = Fraction(0)
        for (i, j), val in z.items():
            if i == v:
                total += val
            elif j == v:
                total -= val
        return total

    def check(self, z: dict) -> bool:
        """Direct substitution test of a candidate assignment."""
        if set(z) != set(self.edges):
            return False
        for e, (lo, hi) in self.edges.items():
            if not lo <= z[e] <= hi:
                return False
        sums = {v: Fraction(0) for v in self.vertices()}
        for (i, j), val in z.items():
            sums[i] += val
            sums[j] -= val
        for v, c in self.vertex_constraints.items():
            lo, hi = c.bounds
            if not lo <= sums[v] <= hi:
                return False
        return True


@dataclass
class FeasibilityResult:
    feasible: bool
    witness: dict | None = None
    # vertices on the source side of a saturated cut; their constraints
    # cannot be met together with the edge boxes leaving that side
    violated_cut: dict | None = None

    def __bool__(self):
        return self.feasible


# -- max flow ----------------------------------------------------------------

class _Dinic:
    def __init__(self, n):
        self.n = n
        self.graph = [[] for _ in range(n)]  # arc = [to, cap, index of reverse]

    def add(self, u, v, cap):
        a = [v, cap, len(self.graph[v])]
        b = [u, 0, len(self.graph[u])]
        self.graph[u].append(a)
        self.graph[v].append(b)
        return a

    def _levels(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v, cap, _ in self.graph[u]:
                if cap > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def _push(self, s, t, level, it):
        # iterative DFS along the level graph; returns pushed amount
        path = []
        u = s
        while True:
            if u == t:
                f = min(arc[1] for arc in path)
                for arc in path:
                    arc[1] -= f
                    self.graph[arc[0]][arc[2]][1] += f
                return f
            advanced = False
            while it[u] < len(self.graph[u]):
                arc = self.graph[u][it[u]]
                if arc[1] > 0 and level[arc[0]] == level[u] + 1:
                    path.append(arc)
                    u = arc[0]
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                if not path:
                    return 0
                level[u] = -1  # dead end
                arc = path.pop()
                u = self.graph[arc[0]][arc[2]][0]
                it[u] += 1

    def max_flow(self, s, t):
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            it = [0] * self.n
            while True:
                f = self._push(s, t, level, it)
                if not f:
                    break
                flow += f

    def reachable(self, s):
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v, cap, _ in self.graph[u]:
                if cap > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


def _denominators(system):
    for lo, hi in system.edges.values():
        yield lo.denominator
        yield hi.denominator
    for c in system.vertex_constraints.values():
        for b in c.bounds:
            yield b.denominator


def solve(system: EdgeVariableSystem) -> FeasibilityResult:
    """Decide the system exactly; return a witness or a certifying cut."""
    verts = system.vertices()
    if not verts:
        return FeasibilityResult(True, {})

    scale = lcm(1, *_denominators(system))
    index = {v: k + 1 for k, v in enumerate(verts)}  # 0 is the hub
    hub, S, T = 0, len(verts) + 1, len(verts) + 2
    net = _Dinic(len(verts) + 3)
    excess = [0] * (len(verts) + 3)

    # a vertex's incident sum can never exceed the sum of its boxes' extents
    reach = {v: 0 for v in verts}
    for (i, j), (lo, hi) in system.edges.items():
        m = int(max(abs(lo), abs(hi)) * scale)
        reach[i] += m
        reach[j] += m

    arcs = []

    def arc(u, v, lo, hi):
        excess[v] += lo
        excess[u] -= lo
        return net.add(u, v, hi - lo), lo

    for e, (lo, hi) in system.edges.items():
        i, j = e
        arcs.append((e, *arc(index[i], index[j], int(lo * scale), int(hi * scale))))

    for v in verts:
        c = system.vertex_constraints.get(v)
        if c is None:
            lo, hi = -reach[v], reach[v]
        else:
            lo, hi = (int(b * scale) for b in c.bounds)
        arc(hub, index[v], lo, hi)

    need = 0
    for node, ex in enumerate(excess):
        if ex > 0:
            net.add(S, node, ex)
            need += ex
        elif ex < 0:
            net.add(node, T, -ex)

    if net.max_flow(S, T) == need:
        # the reverse arc's residual is the flow pushed on the forward arc
        witness = {e: Fraction(lo + net.graph[a[0]][a[2]][1], scale) for e, a, lo in arcs}
        return FeasibilityResult(True, witness)

    side = net.reachable(S)
    members = sorted(v for v in verts if index[v] in side)
    cut = {
        "vertices": members,
        "includes_hub": hub in side,
        "constrained": sorted(v for v in members if v in system.vertex_constraints),
    }
    return FeasibilityResult(False, None, cut)

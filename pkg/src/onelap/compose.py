"""mu-modules and the four ways of assembling eigenvectors from them.

A module is a small graph ``H`` with values ``phi``, a core where the
eigen-inclusion must hold, and a socket of attachment vertices where it need
not.  Operations work on the unnormalized ternary form (values in {-1, 0, 1})
whenever a module has it; the inclusion system only sees signs, so this loses
nothing, and values then match across modules of different volumes.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .eigen import (EigenCertificate, as_vector, dump_vertex_function, eigen_system,
                    format_rational, is_eigenpair, load_vertex_function, parse_rational)
from .feasibility import solve
from .graph import Graph, connected_components, load_graph


class ModuleError(ValueError):
    pass


@dataclass(frozen=True)
class MuModule:
    H: Graph
    phi: tuple
    core: frozenset
    socket: frozenset
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "phi", as_vector(self.H, self.phi))
        object.__setattr__(self, "core", frozenset(self.core))
        object.__setattr__(self, "socket", frozenset(self.socket))
        object.__setattr__(self, "mu", Fraction(self.mu))
        if self.core & self.socket:
            raise ModuleError(f"core and socket overlap in {sorted(self.core & self.socket)}")
        if self.core | self.socket != frozenset(self.H.vertices):
            missing = sorted(frozenset(self.H.vertices) - self.core - self.socket)
            raise ModuleError(f"core and socket must cover all vertices; missing {missing}")
        for i, j in self.H.edges:
            if i in self.socket and j in self.socket:
                raise ModuleError(f"socket vertices {i} and {j} are adjacent")

    def negated(self) -> "MuModule":
        return replace(self, phi=tuple(-t for t in self.phi))

    def ternary(self) -> "MuModule":
        """Same module with phi replaced by its signs, when phi is ternary-shaped."""
        mags = {abs(t) for t in self.phi if t}
        if len(mags) > 1:
            return self
        return replace(self, phi=tuple(Fraction((t > 0) - (t < 0)) for t in self.phi))

    def value(self, v) -> Fraction:
        return self.phi[v - 1]


def is_mu_module(m: MuModule) -> EigenCertificate | None:
    """Solve the inclusion system with vertex rows only at core vertices."""
    res = solve(eigen_system(m.H, m.mu, m.phi, constrained=sorted(m.core)))
    return EigenCertificate(m.mu, res.witness) if res else None


def is_eigencomponent(m: MuModule) -> bool:
    """A module with connected core whose phi is a positive multiple of 1_A, A in the core."""
    if not m.core or len(connected_components(m.H, m.core)) != 1:
        return False
    support = {v for v in m.H.vertices if m.phi[v - 1] != 0}
    if not support or not support <= m.core:
        return False
    if len({m.phi[v - 1] for v in support}) != 1 or m.phi[min(support) - 1] < 0:
        return False
    return is_mu_module(m) is not None


def _rep(m: MuModule) -> MuModule:
    return m.ternary()


# -- extension ---------------------------------------------------------------

def extend(G: Graph, m: MuModule, embedding: dict) -> tuple:
    """Zero-extend a module's phi to G through an induced embedding H -> G."""
    G.require_connected()
    if set(embedding) != set(m.H.vertices):
        raise ModuleError("embedding must map every vertex of H")
    image = set(embedding.values())
    if len(image) != m.H.n or not all(1 <= v <= G.n for v in image):
        raise ModuleError("embedding must be injective into the vertices of G")
    for a in m.H.vertices:
        for b in m.H.vertices:
            if a < b and m.H.has_edge(a, b) != G.has_edge(embedding[a], embedding[b]):
                raise ModuleError(f"embedding is not induced at the pair ({a}, {b})")
    for s in m.socket:
        if m.phi[s - 1] != 0:
            raise ModuleError(f"socket vertex {s} carries a nonzero value")
    core_img = {embedding[v] for v in m.core}
    for j in G.vertices:
        if j in image:
            continue
        if G.adjacency[j] & image and G.adjacency[j] & core_img:
            raise ModuleError(f"outside vertex {j} is adjacent to the embedded core")
    x = [Fraction(0)] * G.n
    for v in m.H.vertices:
        x[embedding[v] - 1] = m.phi[v - 1]
    x = tuple(x)
    if not is_eigenpair(G, m.mu, x):
        raise ModuleError("extension is not an eigenvector of G (phi is not a module at mu)")
    return x


# -- joining -----------------------------------------------------------------

@dataclass(frozen=True)
class JoinSpec:
    chosen: tuple  # one socket vertex per module, in that module's labels
    edges: tuple = ()  # pairs (a, b) of module indices: new edge u_a -- u_b
    alpha: dict = field(default_factory=dict)  # optional {(a, b): value}


def _disjoint_union(modules):
    offsets, edges, phi = [], [], []
    off = 0
    for m in modules:
        offsets.append(off)
        edges += [(i + off, j + off) for i, j in m.H.edges]
        phi += list(m.phi)
        off += m.H.n
    return offsets, edges, phi, off


def join(modules, spec: JoinSpec) -> MuModule:
    modules = [_rep(m) for m in modules]
    if not modules:
        raise ModuleError("join needs at least one module")
    if len({m.mu for m in modules}) != 1:
        raise ModuleError("modules have different mu")
    if len(spec.chosen) != len(modules):
        raise ModuleError("choose exactly one socket vertex per module")
    for k, (m, u) in enumerate(zip(modules, spec.chosen)):
        if u not in m.socket:
            raise ModuleError(f"vertex {u} is not in the socket of module {k}")
        if m.phi[u - 1] != 0:
            raise ModuleError(f"chosen vertex {u} of module {k} is not null")
    offsets, edges, phi, n = _disjoint_union(modules)
    us = [u + off for u, off in zip(spec.chosen, offsets)]
    new_edges = []
    for a, b in spec.edges:
        if a == b:
            raise ModuleError("a join edge needs two different modules")
        new_edges.append((us[a], us[b]))
    H = Graph.from_edges(n, edges + new_edges)
    core = {v + off for m, off in zip(modules, offsets) for v in m.core} | set(us)
    socket = {v + off for m, off in zip(modules, offsets) for v in m.socket} - set(us)
    out = MuModule(H, tuple(phi), frozenset(core), frozenset(socket), modules[0].mu)
    system = eigen_system(H, out.mu, out.phi, constrained=sorted(core))
    for (a, b), val in spec.alpha.items():
        val = Fraction(val)
        if not -1 <= val <= 1:
            raise ModuleError(f"alpha for ({a}, {b}) lies outside [-1, 1]")
        i, j = us[a], us[b]
        if i > j:
            i, j, val = j, i, -val
        if (i, j) not in system.edges:
            raise ModuleError(f"alpha given for ({a}, {b}) which is not a join edge")
        system.edges[(i, j)] = (val, val)
    if not solve(system):
        raise ModuleError("no admissible alpha exists for this join")
    return out


def join_alpha(m: MuModule, spec: JoinSpec, modules) -> dict:
    """Admissible alpha on the join edges of an assembled join."""
    offsets = _disjoint_union([_rep(x) for x in modules])[0]
    us = [u + off for u, off in zip(spec.chosen, offsets)]
    cert = is_mu_module(m)
    return {(a, b): cert.z(us[a], us[b]) for a, b in spec.edges}


# -- pasting -----------------------------------------------------------------

def paste(modules, chosen) -> MuModule:
    """Identify one socket vertex from each module into a single core vertex."""
    modules = [_rep(m) for m in modules]
    if not modules:
        raise ModuleError("paste needs at least one module")
    if len({m.mu for m in modules}) != 1:
        raise ModuleError("modules have different mu")
    if len(chosen) != len(modules):
        raise ModuleError("choose exactly one socket vertex per module")
    for k, (m, u) in enumerate(zip(modules, chosen)):
        if u not in m.socket:
            raise ModuleError(f"vertex {u} is not in the socket of module {k}")
    values = {m.phi[u - 1] for m, u in zip(modules, chosen)}
    if len(values) != 1:
        raise ModuleError(f"pasted vertices carry different values {sorted(values)}")
    first = modules[0]
    u = chosen[0]
    maps = [{v: v for v in first.H.vertices}]
    n = first.H.n
    for m, c in zip(modules[1:], chosen[1:]):
        mp = {c: u}
        for v in m.H.vertices:
            if v != c:
                n += 1
                mp[v] = n
        maps.append(mp)
    edges, phi = [], [Fraction(0)] * n
    core, socket = {u}, set()
    for m, mp in zip(modules, maps):
        edges += [(mp[i], mp[j]) for i, j in m.H.edges]
        for v in m.H.vertices:
            phi[mp[v] - 1] = m.phi[v - 1]
        core |= {mp[v] for v in m.core}
        socket |= {mp[v] for v in m.socket}
    socket.discard(u)
    out = MuModule(Graph.from_edges(n, edges), tuple(phi), frozenset(core),
                   frozenset(socket), first.mu)
    if not is_mu_module(out):
        raise ModuleError("the pasted vertex cannot satisfy the inclusion (assumption fails)")
    return out


# -- plugging ----------------------------------------------------------------

def _plug_neighbor(m, s, label):
    if s not in m.socket:
        raise ModuleError(f"vertex {s} is not in the socket of {label}")
    if m.phi[s - 1] != 0:
        raise ModuleError(f"socket vertex {s} of {label} is not null")
    nbrs = m.H.adjacency[s]
    if len(nbrs) != 1:
        raise ModuleError(f"socket vertex {s} of {label} must have exactly one neighbour")
    (v,) = nbrs
    if m.phi[v - 1] != 1:
        raise ModuleError(f"neighbour {v} of socket {s} in {label} must carry the value 1")
    return v


def plug(m1: MuModule, m2: MuModule, matching) -> MuModule:
    """Remove matched socket pairs, wire their neighbours together, negate m2."""
    m1, m2 = _rep(m1), _rep(m2)
    if m1.mu != m2.mu:
        raise ModuleError("modules have different mu")
    matching = list(matching)
    if not matching:
        raise ModuleError("plug needs at least one matched socket pair")
    if len({a for a, _ in matching}) != len(matching) or len({b for _, b in matching}) != len(matching):
        raise ModuleError("a socket vertex is matched twice")
    wires = [(_plug_neighbor(m1, a, "the first module"), _plug_neighbor(m2, b, "the second module"))
             for a, b in matching]
    gone1 = {a for a, _ in matching}
    gone2 = {b for _, b in matching}
    map1, map2 = {}, {}
    n = 0
    for v in m1.H.vertices:
        if v not in gone1:
            n += 1
            map1[v] = n
    for v in m2.H.vertices:
        if v not in gone2:
            n += 1
            map2[v] = n
    edges = [(map1[i], map1[j]) for i, j in m1.H.edges if i in map1 and j in map1]
    edges += [(map2[i], map2[j]) for i, j in m2.H.edges if i in map2 and j in map2]
    edges += [(map1[v1], map2[v2]) for v1, v2 in wires]
    phi = [Fraction(0)] * n
    for v, k in map1.items():
        phi[k - 1] = m1.phi[v - 1]
    for v, k in map2.items():
        phi[k - 1] = -m2.phi[v - 1]
    core = {map1[v] for v in m1.core} | {map2[v] for v in m2.core}
    socket = {map1[v] for v in m1.socket if v in map1} | {map2[v] for v in m2.socket if v in map2}
    out = MuModule(Graph.from_edges(n, edges), tuple(phi), frozenset(core), frozenset(socket), m1.mu)
    if not is_mu_module(out):
        raise ModuleError("plugged module fails the inclusion system")
    return out


# -- module files ------------------------------------------------------------

def load_module(text: str) -> MuModule:
    """Parse a module file: ``graph:`` edge list, ``core:``, ``socket:``, ``phi:`` lines, ``mu:``."""
    graph_lines, phi_lines = [], []
    core = socket = mu = None
    mode = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if sep and key in ("graph", "phi", "core", "socket", "mu"):
            rest = rest.strip()
            if key in ("graph", "phi"):
                mode = key
                if rest:
                    raise ModuleError(f"line {lineno}: '{key}:' starts a section on its own line")
                continue
            mode = None
            try:
                if key == "mu":
                    mu = parse_rational(rest)
                else:
                    vals = frozenset(int(t) for t in rest.replace(",", " ").split())
                    if key == "core":
                        core = vals
                    else:
                        socket = vals
            except ValueError:
                raise ModuleError(f"line {lineno}: cannot parse {key} list {rest!r}") from None
            continue
        if mode == "graph":
            graph_lines.append(line)
        elif mode == "phi":
            phi_lines.append(line)
        else:
            raise ModuleError(f"line {lineno}: unexpected text outside a section: {line!r}")
    if not graph_lines:
        raise ModuleError("module file has no graph section")
    if mu is None or core is None:
        raise ModuleError("module file needs 'core:' and 'mu:' lines")
    H = load_graph("\n".join(graph_lines))
    phi = load_vertex_function("\n".join(phi_lines), H.n)
    socket = socket if socket is not None else frozenset(H.vertices) - core
    return MuModule(H, phi, core, socket, mu)


def dump_module(m: MuModule) -> str:
    lines = ["graph:", m.H.to_text().rstrip("\n"),
             "core: " + " ".join(map(str, sorted(m.core))),
             "socket: " + " ".join(map(str, sorted(m.socket))),
             "phi:", dump_vertex_function(m.phi).rstrip("\n"),
             f"mu: {format_rational(m.mu)}"]
    return "\n".join(lines) + "\n"

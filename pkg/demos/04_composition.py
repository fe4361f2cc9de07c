# %% Building eigenvectors from small modules
# A module carries values on a core, where the eigen-inclusion must hold, and
# on socket vertices, where it need not.  Values are kept in {-1, 0, 1}.
from fractions import Fraction

from onelap import Graph, MuModule, is_eigenpair, normalize, paste, plug

P3 = MuModule(Graph.from_edges(3, [(1, 2), (2, 3)]), [1, 1, 0], {1, 2}, {3}, Fraction(1, 3))
P5 = MuModule(Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)]), [0, 1, 1, 1, 0], {2, 3, 4}, {1, 5},
              Fraction(1, 3))

# %% Plugging removes matched sockets and flips the second module
m = plug(P5, P5, [(1, 5), (5, 1)])
x = normalize(m.H, m.phi)
print(m.H.sorted_edges)
print([str(t) for t in x], bool(is_eigenpair(m.H, m.mu, x)))

# %% Pasting identifies chosen null sockets
m = paste([P3, P5.negated()], [3, 1])
print(m.H.sorted_edges, [str(t) for t in normalize(m.H, m.phi)])

# %% Joining adds edges between chosen sockets; alpha is solved when not given
from onelap import JoinSpec, join

K3 = MuModule(Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)]), [1, 1, 0], {1, 2}, {3}, Fraction(1, 2))
m = join([K3, K3, K3.negated()], JoinSpec((3, 3, 3), ((0, 1), (1, 2), (2, 0))))
x = normalize(m.H, m.phi)
print([str(t) for t in x], bool(is_eigenpair(m.H, m.mu, x)))

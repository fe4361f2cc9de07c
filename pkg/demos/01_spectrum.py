# %% Eigenvalues of a six-vertex graph
# Every eigenvalue has a binary eigenvector 1_A / vol(A) on a connected set A,
# so the spectrum comes from enumerating connected sets and solving a flow.
from fractions import Fraction

from onelap import binary_vector, is_eigenpair, named_graph, spectrum

G = named_graph("G6")
print(G.sorted_edges)

rep = spectrum(G)
for mu, supports in rep.entries:
    print(f"{str(mu):>4}", [sorted(A) for A in supports])

# %% A certificate is an edge selection z solving the inclusion
x = binary_vector(G, {2, 5, 6})
cert = is_eigenpair(G, Fraction(5, 9), x)
for (i, j), z in sorted(cert.witness.items()):
    print(f"z[{i},{j}] = {z}")

# %% Not every ratio is an eigenvalue: 1_{1,5} has ratio 3/4 but fails
print(is_eigenpair(G, Fraction(3, 4), binary_vector(G, {1, 5})))

# %% Closed forms for paths, cycles and complete graphs
from onelap import path_graph, spectrum_closed_form

for n in (5, 6, 10):
    print(n, sorted(spectrum_closed_form("path", n)) == list(spectrum(path_graph(n)).values))

# %% Nodal domains of an eigenvector on a ten-vertex graph
from fractions import Fraction

from onelap import is_eigenpair, named_graph, normalize, strong_count

G = named_graph("EX_10G")
x = normalize(G, [-1] * 4 + [1] * 6)
print(bool(is_eigenpair(G, Fraction(1, 7), x)))
dec = strong_count(G, x)
print("positive", dec.positive, "negative", dec.negative, "S =", dec.S, "W =", dec.W)

# %% The most nodal domains an eigenvalue allows, with a witness
from onelap import nu, nu_closed_form, path_graph, spectrum

P = path_graph(10)
for mu in spectrum(P).values:
    count, w = nu(P, mu)
    print(f"{str(mu):>4}", count, nu_closed_form("path", 10, mu), [str(t) for t in w])

# %% Algebraic multiplicity: rank of the binary eigenvectors at mu
from onelap import algebraic_multiplicity, triangle_decompose

G6 = named_graph("G6")
for mu in spectrum(G6).values:
    am, system = algebraic_multiplicity(G6, mu)
    print(f"{str(mu):>4}", am, [sorted(A) for A in system.members])

# %% Any eigenvector splits into level sets that are eigenvectors themselves
for term in triangle_decompose(G, Fraction(1, 7), x):
    print(term.sign, term.coefficient, sorted(term.support))

# %% Cheeger constants and the cuts that attain them
from onelap import cheeger_h, k_way_cheeger, named_graph, optimal_cheeger_cut

G6 = named_graph("G6")
print("h(G6) =", cheeger_h(G6))
print("h_k(G6) =", [str(k_way_cheeger(G6, k)) for k in range(1, G6.n + 1)])

# %% The smallest positive eigenvalue is h(G)
from onelap import spectrum

print(min(mu for mu in spectrum(G6).values if mu > 0))

# %% Among Cheeger cuts, the best leave the largest null set (smallest delta0)
rep = optimal_cheeger_cut(named_graph("EX_7G"))
for A, d0 in rep.cuts:
    print(sorted(A), "delta0 =", d0)
print("optimal:", [sorted(A) for A in rep.optimal])

# %% Lower bounds for minimax values from subspaces
from onelap import ck_bounds, min_I_on_subspace

X3 = [(0, 1, 0, -1, 0, 0), (0, 0, 1, -1, 0, 0), (0, 0, 0, 0, 0, 1)]
print("min I on X3 =", min_I_on_subspace(G6, X3))
for k in (4, 5, 6):
    print(k, ck_bounds(G6, k, [X3]).resolved)

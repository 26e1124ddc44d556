"""
Semi-kernels and vertex domination
==================================

Every oriented graph has an independent set reaching all vertices in at
most two steps. Recursing on what it misses gives a dominating set whose
size depends only on the independence number.
"""

from tridom import (
    alpha_exact,
    bound_tables,
    dominate_acyclic_orientation,
    dominate_clique_acyclic,
    gamma_exact,
    gen_random_digraph,
    gen_random_multipartite_trianglefree,
    semi_kernel,
)
from tridom.generators import gen_random_dag

D = gen_random_digraph(30, 0.3, 1)
U = semi_kernel(D)
print("semi-kernel of a random digraph:", sorted(U))

f = bound_tables(4).f
for seed in range(8):
    # singleton classes: an ordinary oriented graph
    G = gen_random_multipartite_trianglefree(14, 1, 0.85, seed)
    a = alpha_exact(G)
    chosen, _ = dominate_clique_acyclic(G)
    print(f"seed {seed}: alpha={a} gamma={gamma_exact(G)[0]} found={len(chosen)} bound f={f[a]}")

# acyclic orientations are dominated by an independent set, layer by layer
dag = gen_random_dag(20, 0.3, 4)
chosen, _ = dominate_acyclic_orientation(dag)
print("DAG:", sorted(chosen), "alpha =", alpha_exact(dag))

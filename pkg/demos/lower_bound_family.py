"""
A bipartite family that resists one-sided domination
====================================================

D_k is a complete bipartite orientation where neither side can cover the
other with k vertices. Sides grow as 2, 6, 24, 120.
"""

import time

from tridom import gamma0_exact, gen_Dk
from tridom.generators import dk_levels

print("side sizes:", [lv.m for lv in dk_levels(4)])

for k in (1, 2, 3):
    D = gen_Dk(k)
    start = time.perf_counter()
    res = gamma0_exact(D)
    print(f"k={k}: {D.num_vertices} vertices, gamma_A={res.gamma_a} gamma_B={res.gamma_b} "
          f"gamma0={res.gamma0} ({time.perf_counter() - start:.3f}s)")

# random bipartite tournaments usually resist two vertices too
from tridom import gen_random_bipartite_tournament

hits = sum(gamma0_exact(gen_random_bipartite_tournament(30, s)).gamma0 > 2 for s in range(20))
print(f"random n=30: {hits}/20 need more than two vertices")

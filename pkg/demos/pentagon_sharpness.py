"""
Why three vertices can be necessary
===================================

With independence number two, three vertices always dominate an oriented
graph without cyclic triangles. The cyclic pentagon needs all three.
"""

from tridom import alpha_exact, dominate_alpha2, gamma_exact, gen_pentagons

P = gen_pentagons(1)
print("arcs:", sorted(P.arcs))
print("alpha =", alpha_exact(P))

# exact domination number by search, with the lexicographically first optimum
gamma, cert = gamma_exact(P)
print("gamma =", gamma, "witness", cert.chosen)

# the constructive solver builds its triple incrementally
chosen, cert = dominate_alpha2(P)
print("solver picks", sorted(chosen), "in-neighbour of each other vertex:", cert.witness)

# disjoint copies add up
for t in (1, 2):
    Pt = gen_pentagons(t)
    print(f"t={t}: alpha={alpha_exact(Pt)} gamma={gamma_exact(Pt)[0]}")

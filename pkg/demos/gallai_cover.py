"""
Covering a Gallai-coloured graph by monochromatic components
============================================================

Edge colourings without rainbow triangles. With independence number two,
five monochromatic connected pieces cover every vertex.
"""

from tridom import check_gallai, check_largecomp_bound, cover_by_mono_components, gen_random_gallai
from tridom.io import serialize_ecg

sample = gen_random_gallai(40, 2, 4, 3)
G = sample.graph
print(G, "alpha =", sample.alpha, "rainbow triangle:", check_gallai(G))

for color, part in cover_by_mono_components(G):
    print(f"colour {color}: {len(part)} vertices")

big = check_largecomp_bound(G)
print(f"largest monochromatic component {big.largest} >= {big.threshold:.1f}: {big.holds}")

print(serialize_ecg(gen_random_gallai(5, 1, 2, 0).graph))

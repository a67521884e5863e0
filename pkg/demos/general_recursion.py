"""
Halving the color classes: the logarithmic bound in action
==========================================================

Any graph with a proper k-class vertex coloring gets a conflict-free edge
coloring from 2*ceil(log2 k) partial colors (+1 to finish): split the
classes in half, give the crossing edges two colors via the bipartite
construction, recurse on the rest. The Petersen graph and K8 below.
"""

import math

from cfcolor import (
    build_graph,
    colors_used,
    general_cf_coloring,
    greedy_vertex_coloring,
    recursive_scf_coloring,
    verify_cf,
)
from cfcolor.cli import to_dot
from cfcolor.generators import complete

petersen = build_graph(10, [
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
])

vc = greedy_vertex_coloring(petersen)
print(f"Petersen graph: n={petersen.n} m={petersen.m}")
print(f"saturation-greedy classes: k={vc.k}, class per vertex = {vc.class_of}")

levels = max(1, math.ceil(math.log2(vc.k)))
partial = recursive_scf_coloring(petersen, vc)
print(f"\npartial coloring with at most 2*{levels} = {2 * levels} colors:")
print(partial.colors)
print("colors actually used:", colors_used(partial))
print("every edge satisfied:", verify_cf(petersen, partial).conflict_free())

total, _ = general_cf_coloring(petersen)
print(f"\ntotal coloring: {total.colors}")
print(f"colors used {colors_used(total)} <= bound {2 * levels + 1}")

# --- K8 needs three halving levels ----------------------------------------

g = complete(8)
vc = greedy_vertex_coloring(g)
levels = math.ceil(math.log2(vc.k))
partial = recursive_scf_coloring(g, vc)
print(f"\nK8: k={vc.k} classes -> {levels} levels -> {2 * levels} partial colors")

# Edges crossing the first class split carry the top color pair; the rest
# were handled deeper in the recursion with strictly smaller colors.
half = 2 ** (levels - 1)
for eid, (u, v) in enumerate(g.edges[:8]):
    crossing = (vc.class_of[u] <= half) != (vc.class_of[v] <= half)
    print(f"  edge {eid} = ({u},{v})  crossing={crossing}  color={partial.colors[eid]}")

total, _ = general_cf_coloring(g)
print(f"K8 total: {colors_used(total)} colors "
      f"(bound {2 * levels + 1}), conflict-free: "
      f"{verify_cf(g, total).conflict_free()}")

# DOT output for eyeballing in graphviz
print("\nfirst lines of DOT output for the Petersen coloring:")
print("\n".join(to_dot(petersen, partial).splitlines()[:5]))

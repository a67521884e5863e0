"""
Which trees get away with two colors?
=====================================

For a tree, one color handles only a single edge, and three always work.
Whether *two* suffice reduces to finding an edge subset F (color 1; the
rest color 2) meeting a local degree condition at every edge, and that is
decidable by dynamic programming bottom-up over the tree.
"""

from cfcolor import (
    build_graph,
    check_f_certificate,
    coloring_from_f,
    decide_tree_two,
    f_from_coloring,
    format_f_set,
    tree_cf_index,
    verify_cf,
)
from cfcolor.generators import all_labeled_trees, path, star

# --- small wins -------------------------------------------------------------

for name, t in [("P4 (path)", path(4)), ("star on 6", star(6))]:
    f = decide_tree_two(t)
    print(f"{name}: edges={t.edges}")
    print(f"  F = {sorted(f)}  ->  2-coloring {coloring_from_f(t, f).colors}")

# A spider with three legs of length two: the leg tips go into F.
spider = build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
f = decide_tree_two(spider)
print(f"\nspider: F = {format_f_set(f)}", end="")
cert = check_f_certificate(spider, f)
print("per-edge condition met:", cert.per_edge_condition)
col = coloring_from_f(spider, f)
print("coloring:", col.colors, "conflict-free:",
      verify_cf(spider, col).conflict_free())
print("recovered F from the coloring:", sorted(f_from_coloring(spider, col)))

# --- and the smallest tree that refuses ------------------------------------

# Two legs of length two plus one pendant edge at the centre: six vertices,
# and no subset F works.
stubborn = build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)])
print(f"\nstubborn 6-vertex tree: decide -> {decide_tree_two(stubborn)}")
print("index:", tree_cf_index(stubborn))

# Show why one candidate fails: F = {(0,3)} leaves both long legs bare.
verdict = check_f_certificate(stubborn, frozenset({2}))
print("F = {2} violates edges:", verdict)

# --- a census over every labelled 6-vertex tree ----------------------------

counts = {1: 0, 2: 0, 3: 0}
for _, t in all_labeled_trees(6):
    counts[tree_cf_index(t)] += 1
print(f"\nall 1296 labelled trees on 6 vertices: "
      f"{counts[2]} need 2 colors, {counts[3]} need 3")

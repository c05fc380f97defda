#!/usr/bin/env python3
"""Connected-set counting from first principles.

A connected set of a graph is a nonempty vertex subset whose induced
subgraph is connected.  This walk-through builds a few small graphs, lists
their connected sets by brute force, and introduces the growth value
c(G) = N(G)^(1/|V|), which always lands strictly between 1 and 2 for a
connected graph on at least two vertices.
"""

from latcount import (
    c_value,
    count_connected_sets,
    cycle_graph,
    enumerate_connected_sets,
    path_graph,
    product_with_path,
    star_graph,
)


def bits(mask):
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


# ----------------------------------------------------------------------------
# The 3-path: six connected sets; {0, 2} is missing because its two
# vertices are not adjacent.
# ----------------------------------------------------------------------------
p3 = path_graph(3)
print("connected sets of P3:")
for members in enumerate_connected_sets(p3):
    print("  ", bits(members))
print("count:", count_connected_sets(p3))
print()

# ----------------------------------------------------------------------------
# Cycles: every arc is connected, so C_m has m*(m-1) + 1 connected sets
# plus the m singletons... easier to just count.
# ----------------------------------------------------------------------------
for m in (3, 4, 5, 6):
    cm = cycle_graph(m)
    print(f"N(C{m}) = {count_connected_sets(cm):4d}   c = {c_value(cm):.6f}")
print()

# ----------------------------------------------------------------------------
# Products with a path: the cube graph is C4 x P2.
# ----------------------------------------------------------------------------
cube = product_with_path(cycle_graph(4), 2)
print(f"cube: {cube.vertex_count} vertices, {cube.edge_count} edges")
print("N(cube) =", count_connected_sets(cube))
print("c(cube) =", round(c_value(cube), 6))
print()

# ----------------------------------------------------------------------------
# The growth value stays inside (1, 2) and reflects how richly connected
# the graph is.
# ----------------------------------------------------------------------------
for label, g in [
    ("P6 (path)", path_graph(6)),
    ("C6 (cycle)", cycle_graph(6)),
    ("K1,5 (star)", star_graph(6)),
    ("C4 x P3", product_with_path(cycle_graph(4), 3)),
]:
    print(f"c({label}) = {c_value(g):.6f}")

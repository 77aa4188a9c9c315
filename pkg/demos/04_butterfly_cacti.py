"""Butterfly-cacti: every connected cactus obstruction, constructively.

Gluing k butterflies together (each new one attached by an extremal vertex
at a non-central vertex) gives exactly the connected cactus obstructions at
apex level k-1.  Their counts 1, 1, 3, 7, 25, 88 are the coefficients of
the tree series T(x).  Disconnected cactus obstructions are disjoint unions
of butterfly-cacti with levels summing to k+1, plus (k+2) triangles.

Run:  python demos/04_butterfly_cacti.py
"""

from apexobs import (
    central_set,
    disconnected_obstructions,
    generate_Z,
    is_obstruction,
    to_graph6,
)
from apexobs.cacti import count_forest_apex_sets

for k in range(1, 6):
    members = generate_Z(k)
    print(f"Z_{k}: {len(members)} graphs on {members[0].graph.n} vertices")

# the unique apex-forest set: removing the central vertices (and nothing
# else of that size) leaves a forest
print("\ncentral sets of the three 3-butterfly-cacti:")
for b in generate_Z(3):
    ks = central_set(b, verify="unique")
    print(f"  {to_graph6(b.graph):18s} central={sorted(ks)}  "
          f"(forest 3-subsets: {count_forest_apex_sets(b.graph, 3)})")

# every member of Z_{k+1} is an obstruction at level k
print("\nobstruction-hood of Z_3 at level 2:",
      all(is_obstruction(b.graph, 2) for b in generate_Z(3)))

print("\ndisconnected cactus obstructions:")
for k in (1, 2):
    graphs = disconnected_obstructions(k)
    print(f"  level {k}: {len(graphs)} graphs  " +
          " ".join(to_graph6(g) for g in graphs))

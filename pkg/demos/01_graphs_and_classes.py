"""Tour of the graph core: named graphs, class recognition, blocks.

A graph is sub-unicyclic when it has at most one cycle.  The three minimal
ways to break that property are two disjoint triangles, K4 minus an edge,
and the butterfly (two triangles sharing a vertex) -- we build all three and
poke at them.

Run:  python demos/01_graphs_and_classes.py
"""

from apexobs import (
    ClassId,
    cyclomatic,
    decompose,
    is_in_class,
    make_named,
    min_apex_size,
    peripheral_blocks,
    to_graph6,
)

for name in ("2K3", "K4-", "Z"):
    g = make_named(name)
    print(f"{name:4s}  n={g.n} m={g.num_edges()}  graph6={to_graph6(g)}")
    print(f"      cycles beyond a tree: {cyclomatic(g)}")
    for cls in ClassId:
        print(f"      {cls.value:13s}: {is_in_class(g, cls)}")

# the butterfly is one vertex away from being a forest: deleting the shared
# degree-4 vertex leaves four disjoint edges
z = make_named("Z")
print("\nbutterfly apex numbers:")
print("  deletions to sub-unicyclic:", min_apex_size(z, ClassId.SUB_UNICYCLIC))
print("  deletions to forest:      ", min_apex_size(z, ClassId.FOREST))

# its block structure: two triangle blocks glued at one cut vertex
dec = decompose(z)
print("\nbutterfly blocks:", [sorted(b) for b in dec.blocks])
print("cut vertices:    ", sorted(dec.cut_vertices))
print("peripheral blocks (bc-tree diameter endpoints):",
      [sorted(b) for b in peripheral_blocks(z)])

"""Canonical forms, isomorphism, and exhaustive graph enumeration.

The canonical form is computed by individualization-refinement: refine an
ordered partition of the vertices to an equitable one, branch on the first
non-singleton cell, and take the lexicographically smallest relabelled
adjacency matrix over all branches.  Automorphisms discovered when two
branches produce the same matrix are used to prune sibling branches, which
keeps the search tree near-linear on the highly symmetric cactus graphs this
package generates.

Two graphs have equal canonical forms iff they are isomorphic.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, bits, popcount

_CACHE_SIZE = 1 << 18


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until it is equitable.

    Each pass splits every cell by the vector of neighbor counts into all
    current cells; splitting is deterministic (sub-cells ordered by their
    count signature) so the refined partition is isomorphism-invariant.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                key = tuple(popcount(adj[v] & m) for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for key in sorted(sig):
                new_cells.append(sig[key])
        cells = new_cells
        if not changed:
            return cells


def _matrix_bytes(n: int, adj: tuple[int, ...], order: list[int]) -> bytes:
    """Adjacency matrix bytes after relabelling: position i gets vertex order[i]."""
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rows = bytearray()
    for v in order:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        rows += row.to_bytes(4, "big")
    return bytes(rows)


def _canonical_search_pruned(g: Graph) -> tuple[bytes, list[int]]:
    """Individualization-refinement with orbit pruning (see module docstring)."""
    n, adj = g.n, g.adj
    if n == 0:
        return b"", []
    best: bytes | None = None
    best_order: list[int] | None = None
    gens: list[tuple[int, ...]] = []

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def descend(cells: list[list[int]], fixed: tuple[int, ...]) -> None:
        nonlocal best, best_order
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            s = _matrix_bytes(n, adj, order)
            if best is None or s < best:
                best, best_order = s, order
            elif s == best:
                sigma = [0] * n
                for i in range(n):
                    sigma[best_order[i]] = order[i]
                gens.append(tuple(sigma))
            return
        cell = cells[target]
        explored: list[int] = []
        parent = list(range(n))
        folded = 0
        for v in cell:
            if explored:
                # fold in automorphisms (old and newly found) fixing `fixed`;
                # skip v if one maps an explored sibling onto it
                while folded < len(gens):
                    s = gens[folded]
                    folded += 1
                    if all(s[p] == p for p in fixed):
                        for w in range(n):
                            a, b = find(parent, w), find(parent, s[w])
                            if a != b:
                                parent[a] = b
                rv = find(parent, v)
                if any(find(parent, u) == rv for u in explored):
                    continue
            explored.append(v)
            rest = [u for u in cell if u != v]
            descend(cells[:target] + [[v], rest] + cells[target + 1:], fixed + (v,))

    descend([list(range(n))], ())
    return best, best_order  # type: ignore[return-value]


@lru_cache(maxsize=_CACHE_SIZE)
def _canonical(g: Graph) -> tuple[bytes, tuple[int, ...]]:
    form, order = _canonical_search_pruned(g)
    return bytes([g.n]) + form, tuple(order)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    return _canonical(g)[0]


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Vertex order realizing the canonical form (position i holds order[i])."""
    return _canonical(g)[1]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    order = canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=64)
def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one canonical representative each.

    Built by extending every (n-1)-vertex graph with a new vertex joined to
    every possible subset of the old vertices, deduplicating by canonical
    form.  Counts for n = 0..7: 1, 1, 2, 4, 11, 34, 156, 1044.
    """
    if n == 0:
        return (Graph(0),)
    out: dict[bytes, Graph] = {}
    for g in enumerate_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            h = g.add_vertex(nb)
            key = canonical_form(h)
            if key not in out:
                out[key] = canonical_graph(h)
    return tuple(out[k] for k in sorted(out))


def graphs_up_to(n: int) -> tuple[Graph, ...]:
    """All graphs with 1..n vertices, canonical representatives."""
    out: list[Graph] = []
    for m in range(1, n + 1):
        out.extend(enumerate_graphs(m))
    return tuple(out)

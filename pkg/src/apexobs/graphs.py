"""Small simple graphs as per-vertex bitsets.

Everything in this package works on graphs with at most 32 vertices, so a
neighborhood fits in one machine word.  A :class:`Graph` is immutable; all
editing operations (vertex/edge deletion, contraction, union) return new
graphs with vertices relabelled to ``0..n-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 32


class Graph:
    """Immutable simple undirected graph on at most 32 vertices.

    Attributes:
        n: number of vertices (labelled 0..n-1).
        adj: tuple of n bitsets; bit u of adj[v] is set iff uv is an edge.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n-1}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    @staticmethod
    def from_adj(adj: Iterable[int]) -> Graph:
        """Build a graph directly from a bitset adjacency list (validated)."""
        adj = tuple(adj)
        g = Graph.__new__(Graph)
        object.__setattr__(g, "n", len(adj))
        object.__setattr__(g, "adj", adj)
        g._validate()
        return g

    def _validate(self) -> None:
        n = self.n
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} exceeds {MAX_VERTICES}")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency of {v} mentions vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge ({v},{u})")

    def __setattr__(self, *args):  # pragma: no cover
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {sorted(self.edges())})"

    # -- basic accessors ----------------------------------------------------

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(popcount(row) for row in self.adj))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1)):
                yield (v, u + v + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    # -- derived graphs -----------------------------------------------------

    def subgraph(self, keep: int) -> Graph:
        """Induced subgraph on the vertex bitmask ``keep``, relabelled."""
        old = list(bits(keep))
        pos = {v: i for i, v in enumerate(old)}
        adj = [0] * len(old)
        for v in old:
            for u in bits(self.adj[v] & keep):
                adj[pos[v]] |= 1 << pos[u]
        return Graph.from_adj(adj)

    def delete_vertices(self, drop: Iterable[int]) -> Graph:
        mask = 0
        for v in drop:
            mask |= 1 << v
        return self.subgraph(((1 << self.n) - 1) & ~mask)

    def delete_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u},{v})")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph.from_adj(adj)

    def contract_edge(self, u: int, v: int) -> Graph:
        """Contract edge uv; the merged vertex keeps u's label slot.

        The merged neighborhood is the union minus the endpoints, so the result
        stays simple (parallel edges and loops are dropped).
        """
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u},{v})")
        adj = list(self.adj)
        merged = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
        adj[u] = merged
        for w in bits(adj[v] & ~(1 << u)):
            adj[w] |= 1 << u
        # adj is momentarily asymmetric around v; subgraph() drops v anyway
        tmp = Graph.__new__(Graph)
        object.__setattr__(tmp, "n", self.n)
        object.__setattr__(tmp, "adj", tuple(adj))
        return tmp.delete_vertices([v])

    def add_vertex(self, neighborhood: int = 0) -> Graph:
        """Append a new vertex adjacent to the bitmask ``neighborhood``."""
        adj = list(self.adj)
        for u in bits(neighborhood):
            adj[u] |= 1 << self.n
        adj.append(neighborhood)
        return Graph.from_adj(adj)

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Relabel: vertex v becomes perm[v]."""
        perm = list(perm)
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph.from_adj(adj)


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count() if hasattr(mask, "bit_count") else bin(mask).count("1")


# -- named constructions ----------------------------------------------------


def complete_graph(r: int) -> Graph:
    return Graph(r, combinations(range(r), 2))


def complete_minus_edge(r: int) -> Graph:
    """K_r with one edge removed."""
    if r < 2:
        raise ValueError("K_r minus an edge needs r >= 2")
    return Graph(r, (e for e in combinations(range(r), 2) if e != (0, 1)))


def cycle_graph(r: int) -> Graph:
    if r < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(r, [(i, (i + 1) % r) for i in range(r)])


def path_graph(r: int) -> Graph:
    return Graph(r, [(i, i + 1) for i in range(r - 1)])


def butterfly_graph() -> Graph:
    """Two triangles sharing one vertex; vertex 0 is the central vertex."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    if n > MAX_VERTICES:
        raise ValueError(f"union has {n} > {MAX_VERTICES} vertices")
    adj: list[int] = []
    off = 0
    for g in graphs:
        adj.extend(row << off for row in g.adj)
        off += g.n
    return Graph.from_adj(adj)


_NAME_RE = re.compile(
    r"^(?:(?P<copies>\d+)\s*)?(?P<base>Z|butterfly|K(?P<kr>\d+)(?P<minus>[-−]|_minus)?"
    r"|C(?P<cr>\d+)|P(?P<pr>\d+))$"
)


def make_named(name: str) -> Graph:
    """Build a graph from a compact name.

    Supported names: ``K{r}`` (complete), ``K{r}-`` (complete minus an edge),
    ``C{r}`` (cycle), ``P{r}`` (path), ``Z`` or ``butterfly``, and an optional
    leading multiplier for disjoint copies, e.g. ``2K3`` or ``3Z``.
    """
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ValueError(f"unknown graph name {name!r}")
    base = m.group("base")
    if base in ("Z", "butterfly"):
        g = butterfly_graph()
    elif m.group("kr"):
        r = int(m.group("kr"))
        g = complete_minus_edge(r) if m.group("minus") else complete_graph(r)
    elif m.group("cr"):
        g = cycle_graph(int(m.group("cr")))
    else:
        g = path_graph(int(m.group("pr")))
    copies = int(m.group("copies") or 1)
    if copies < 1:
        raise ValueError(f"bad multiplier in {name!r}")
    return disjoint_union(*([g] * copies))


# -- connectivity and cycle structure ---------------------------------------


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Vertex bitmasks of the connected components (restricted to ``within``)."""
    todo = ((1 << g.n) - 1) if within is None else within
    comps = []
    while todo:
        start = todo & -todo
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v] & todo
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        todo &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def cyclomatic(g: Graph) -> int:
    """|E| - |V| + number of connected components (counts independent cycles)."""
    return g.num_edges() - g.n + len(component_masks(g))


class ClassId(Enum):
    """Recognized minor-closed graph classes."""

    SUB_UNICYCLIC = "subunicyclic"  # at most one cycle overall
    PSEUDOFOREST = "pseudoforest"   # at most one cycle per component
    CACTUS = "cactus"               # every block an edge or a cycle
    FOREST = "forest"               # no cycle


def _edges_within(g: Graph, mask: int) -> int:
    return sum(popcount(g.adj[v] & mask) for v in bits(mask)) // 2


def is_in_class(g: Graph, cls: ClassId) -> bool:
    if cls is ClassId.SUB_UNICYCLIC:
        return cyclomatic(g) <= 1
    if cls is ClassId.FOREST:
        return cyclomatic(g) == 0
    if cls is ClassId.PSEUDOFOREST:
        return all(
            _edges_within(g, comp) <= popcount(comp) for comp in component_masks(g)
        )
    if cls is ClassId.CACTUS:
        return all(
            _edges_within(g, b) == popcount(b)
            or (popcount(b) == 2 and _edges_within(g, b) == 1)
            or popcount(b) == 1
            for b in _block_masks(g)
        )
    raise TypeError(f"not a ClassId: {cls!r}")


def _class_holds_masked(g: Graph, keep: int, cls: ClassId) -> bool:
    """is_in_class on the induced subgraph, without building it when possible."""
    if cls in (ClassId.SUB_UNICYCLIC, ClassId.FOREST):
        comps = component_masks(g, keep)
        cyc = _edges_within(g, keep) - popcount(keep) + len(comps)
        return cyc == 0 if cls is ClassId.FOREST else cyc <= 1
    if cls is ClassId.PSEUDOFOREST:
        return all(
            _edges_within(g, c) <= popcount(c) for c in component_masks(g, keep)
        )
    return is_in_class(g.subgraph(keep), cls)


def min_apex_size(g: Graph, cls: ClassId) -> int:
    """Smallest number of vertex deletions landing g in the class.

    Exhaustive: tries deletion sets of size 0, 1, 2, ... with early exit.
    """
    full = (1 << g.n) - 1
    for s in range(g.n + 1):
        for drop in combinations(range(g.n), s):
            mask = 0
            for v in drop:
                mask |= 1 << v
            if _class_holds_masked(g, full & ~mask, cls):
                return s
    return g.n  # unreachable: the empty graph is in every class


def has_apex_set_within(g: Graph, cls: ClassId, k: int) -> bool:
    """True iff some deletion set of size <= k lands g in the class."""
    full = (1 << g.n) - 1
    for s in range(min(k, g.n) + 1):
        for drop in combinations(range(g.n), s):
            mask = 0
            for v in drop:
                mask |= 1 << v
            if _class_holds_masked(g, full & ~mask, cls):
                return True
    return False


# -- blocks, cut vertices, bc-tree ------------------------------------------


def _block_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the blocks (isolated vertices give singleton blocks)."""
    return _blocks_and_cuts(g)[0]


def _blocks_and_cuts(g: Graph) -> tuple[list[int], int]:
    """Blocks as vertex masks plus the cut-vertex bitmask (Hopcroft-Tarjan)."""
    n = g.n
    disc = [0] * n          # discovery times, 0 = unvisited
    low = [0] * n
    stack: list[tuple[int, int]] = []  # edge stack
    blocks: list[int] = []
    cuts = 0
    timer = 1

    def emit(u: int, v: int) -> None:
        mask = 0
        while stack:
            a, b = stack.pop()
            mask |= (1 << a) | (1 << b)
            if (a, b) == (u, v):
                break
        blocks.append(mask)

    def dfs(root: int) -> None:
        nonlocal timer, cuts
        # iterative DFS: (vertex, parent, iterator over neighbors)
        work = [(root, -1, iter(list(bits(g.adj[root]))))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while work:
            v, parent, it = work[-1]
            advanced = False
            for u in it:
                if disc[u] == 0:
                    stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    work.append((u, v, iter(list(bits(g.adj[u])))))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    emit(pv, v)
                    if pv != root:
                        cuts |= 1 << pv
        if root_children >= 2:
            cuts |= 1 << root

    for v in range(n):
        if disc[v] == 0:
            if g.adj[v] == 0:
                blocks.append(1 << v)  # isolated vertex: trivial block
            else:
                dfs(v)
    return blocks, cuts


BcNode = tuple[str, int]  # ("block", index) or ("cut", vertex)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut-vertices and bc-tree of a graph.

    ``bc_tree`` maps each node to its neighbors; nodes are ("block", i) with i
    indexing ``blocks``, and ("cut", v) for cut-vertices.  For a connected
    graph the bc-tree is a tree; otherwise a forest (one tree per component).
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    bc_tree: dict[BcNode, tuple[BcNode, ...]]

    def block_masks(self) -> list[int]:
        out = []
        for b in self.blocks:
            mask = 0
            for v in b:
                mask |= 1 << v
            out.append(mask)
        return out


def decompose(g: Graph) -> BlockDecomposition:
    """Standard biconnected decomposition plus the block-cut-vertex tree."""
    block_masks, cut_mask = _blocks_and_cuts(g)
    blocks = tuple(frozenset(bits(b)) for b in block_masks)
    cut_vertices = frozenset(bits(cut_mask))
    tree: dict[BcNode, list[BcNode]] = {("block", i): [] for i in range(len(blocks))}
    for v in cut_vertices:
        tree[("cut", v)] = []
    for i, b in enumerate(block_masks):
        for v in bits(b & cut_mask):
            tree[("block", i)].append(("cut", v))
            tree[("cut", v)].append(("block", i))
    frozen = {node: tuple(nbrs) for node, nbrs in tree.items()}
    return BlockDecomposition(blocks, cut_vertices, frozen)


def peripheral_blocks(g: Graph, dec: BlockDecomposition | None = None) -> tuple[frozenset[int], ...]:
    """Leaf-blocks that are an endpoint of some diameter-realizing pair of the bc-tree.

    For a biconnected graph (no cut-vertices) the result is empty -- that is a
    signal, not an error.  Ties are not broken: all blocks participating in any
    maximum-distance pair are returned.
    """
    if not is_connected(g):
        raise ValueError("peripheral blocks need a connected graph")
    dec = dec or decompose(g)
    if not dec.cut_vertices:
        return ()
    # BFS distances between all bc-tree nodes; max distance pairs are
    # realized between leaves, and every bc-tree leaf is a block.
    nodes = list(dec.bc_tree)
    dist: dict[BcNode, dict[BcNode, int]] = {}
    for s in nodes:
        d = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in dec.bc_tree[x]:
                    if y not in d:
                        d[y] = d[x] + 1
                        nxt.append(y)
            frontier = nxt
        dist[s] = d
    diameter = max(dist[a][b] for a in nodes for b in nodes)
    chosen = set()
    for a in nodes:
        for b in nodes:
            if dist[a][b] == diameter:
                for e in (a, b):
                    if e[0] == "block":
                        chosen.add(e[1])
    return tuple(dec.blocks[i] for i in sorted(chosen))


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose removal disconnects their component (= 2-vertex blocks)."""
    out = []
    for mask in _block_masks(g):
        if popcount(mask) == 2:
            u, v = bits(mask)
            if g.has_edge(u, v):
                out.append((u, v))
    return out


# -- one-step minors ---------------------------------------------------------


def one_step_minors(g: Graph) -> tuple[Graph, ...]:
    """All graphs one elementary minor operation below g, up to isomorphism.

    Operations: single edge deletion, single edge contraction (simplified),
    single isolated-vertex deletion.  Deduplicated by canonical form and
    returned in canonical order.
    """
    from .canonical import canonical_form

    seen: dict[bytes, Graph] = {}
    for u, v in g.edges():
        for child in (g.delete_edge(u, v), g.contract_edge(u, v)):
            seen.setdefault(canonical_form(child), child)
    for v in range(g.n):
        if g.adj[v] == 0:
            child = g.delete_vertices([v])
            seen.setdefault(canonical_form(child), child)
            break  # all isolated vertices give the same child
    return tuple(seen[k] for k in sorted(seen))

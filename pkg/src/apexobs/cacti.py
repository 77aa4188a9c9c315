"""Butterfly-cacti: the connected cactus obstructions, and their disconnected kin.

A butterfly is two triangles sharing one vertex (the central vertex, degree
4).  The k-butterfly-cacti are built recursively: start from the butterfly,
then repeatedly identify an extremal vertex of a fresh butterfly with a
non-central vertex of the current graph.  These are exactly the connected
cactus obstructions at apex level k-1; the disconnected ones are disjoint
unions of butterfly-cacti (levels summing to k+1) plus the exceptional
(k+2) disjoint triangles.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .canonical import canonical_form, enumerate_graphs
from .graphs import (
    ClassId,
    Graph,
    butterfly_graph,
    complete_graph,
    component_masks,
    decompose,
    disjoint_union,
    has_apex_set_within,
    is_connected,
    is_in_class,
    min_apex_size,
)
from .minors import max_triangle_packing_in_cactus
from .obstructions import check_obstruction, is_obstruction

MAX_LEVEL = 6  # 5 + 4(k-1) vertices; k=6 gives 25 <= 32


@dataclass(frozen=True)
class ButterflyCactus:
    """A k-butterfly-cactus with its set of central vertices."""

    graph: Graph
    central_vertices: frozenset[int]
    k: int

    def __post_init__(self) -> None:
        if len(self.central_vertices) != self.k:
            raise ValueError("central vertex count must equal the butterfly count")


def _attach_butterfly(b: ButterflyCactus, v: int) -> ButterflyCactus:
    """Identify one extremal vertex of a new butterfly with vertex v.

    The surviving vertex id is v (the one from the old graph); the new
    butterfly contributes four fresh vertices, its central vertex last but
    one.
    """
    g = b.graph
    n = g.n
    a2, c, b1, b2 = n, n + 1, n + 2, n + 3
    edges = list(g.edges()) + [(v, a2), (v, c), (a2, c), (c, b1), (c, b2), (b1, b2)]
    return ButterflyCactus(
        Graph(n + 4, edges), b.central_vertices | {c}, b.k + 1
    )


def generate_Z(k: int) -> tuple[ButterflyCactus, ...]:
    """All k-butterfly-cacti up to isomorphism, with central vertices tracked.

    Deduplication by canonical form happens at every recursion level to keep
    the frontier small.  Counts for k = 1..6: 1, 1, 3, 7, 25, 88.
    """
    if not 1 <= k <= MAX_LEVEL:
        raise ValueError(f"k must be in 1..{MAX_LEVEL}")
    level: dict[bytes, ButterflyCactus] = {
        canonical_form(butterfly_graph()): ButterflyCactus(
            butterfly_graph(), frozenset({0}), 1
        )
    }
    for _ in range(k - 1):
        nxt: dict[bytes, ButterflyCactus] = {}
        for b in level.values():
            for v in range(b.graph.n):
                if v in b.central_vertices:
                    continue
                child = _attach_butterfly(b, v)
                key = canonical_form(child.graph)
                if key not in nxt:
                    nxt[key] = child
        level = nxt
    return tuple(level[key] for key in sorted(level))


def central_set(b: ButterflyCactus, verify: str = "forest") -> frozenset[int]:
    """The central vertices K(G), the unique k-set whose removal leaves a forest.

    verify="forest" re-checks that removing the set leaves a forest;
    verify="unique" additionally brute-forces all k-subsets and demands no
    other one works (exhaustive, meant for k <= 5); verify="none" skips both.
    """
    g, k = b.graph, b.k
    mask = 0
    for v in b.central_vertices:
        mask |= 1 << v
    keep = ((1 << g.n) - 1) & ~mask
    if verify in ("forest", "unique"):
        if not is_in_class(g.subgraph(keep), ClassId.FOREST):
            raise AssertionError("construction bug: central set is not an apex-forest set")
    if verify == "unique":
        if count_forest_apex_sets(g, k) != 1:
            raise AssertionError("construction bug: apex-forest set not unique")
    return b.central_vertices


def count_forest_apex_sets(g: Graph, k: int) -> int:
    """Number of k-subsets of vertices whose removal leaves a forest."""
    from itertools import combinations

    from .graphs import _class_holds_masked

    full = (1 << g.n) - 1
    count = 0
    for drop in combinations(range(g.n), k):
        mask = 0
        for v in drop:
            mask |= 1 << v
        if _class_holds_masked(g, full & ~mask, ClassId.FOREST):
            count += 1
    return count


# -- disconnected obstructions --------------------------------------------------


def _partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of `total` as non-increasing tuples."""
    max_part = total if max_part is None else max_part
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def disconnected_obstructions(k: int) -> tuple[Graph, ...]:
    """Disconnected cactus obstructions at level k, up to isomorphism.

    These are the disjoint unions over multisets {G_1..G_r}, r >= 2, with
    G_i a k_i-butterfly-cactus and sum k_i = k+1, plus the exceptional
    (k+2) disjoint triangles.
    """
    if not 1 <= k <= 4:
        raise ValueError("k must be in 1..4 (largest member has 5(k+1) vertices)")
    zs = {j: [b.graph for b in generate_Z(j)] for j in range(1, k + 1)}
    out: dict[bytes, Graph] = {}
    for part in _partitions(k + 1):
        if len(part) < 2:
            continue
        # choose a multiset of graphs for every repeated part size
        choices: list[list[list[Graph]]] = []
        for size in sorted(set(part)):
            reps = part.count(size)
            choices.append(
                [list(c) for c in combinations_with_replacement(zs[size], reps)]
            )
        def expand(i: int, acc: list[Graph]) -> None:
            if i == len(choices):
                g = disjoint_union(*acc)
                out.setdefault(canonical_form(g), g)
                return
            for combo in choices[i]:
                expand(i + 1, acc + combo)
        expand(0, [])
    exceptional = disjoint_union(*([complete_graph(3)] * (k + 2)))
    out.setdefault(canonical_form(exceptional), exceptional)
    return tuple(out[key] for key in sorted(out))


def exceptional_obstruction(k: int) -> Graph:
    """(k+2) disjoint triangles."""
    return disjoint_union(*([complete_graph(3)] * (k + 2)))


@dataclass(frozen=True)
class CactusObstructionFamily:
    """All cactus obstructions at one level: connected members (the
    (k+1)-butterfly-cacti), the disconnected unions, and the exceptional
    (k+2) disjoint triangles."""

    k: int
    connected: tuple[ButterflyCactus, ...]
    disconnected: tuple[Graph, ...]
    exceptional: Graph

    def __post_init__(self) -> None:
        members = self.all_graphs()
        forms = [canonical_form(g) for g in members]
        if len(set(forms)) != len(forms):
            raise ValueError("family members must be pairwise non-isomorphic")
        for g in members:
            if not is_in_class(g, ClassId.CACTUS):
                raise ValueError("every family member must be a cactus")

    def all_graphs(self) -> tuple[Graph, ...]:
        return (
            tuple(b.graph for b in self.connected)
            + self.disconnected
            + (self.exceptional,)
        )

    def __len__(self) -> int:
        return len(self.connected) + len(self.disconnected) + 1


def cactus_obstruction_family(k: int) -> CactusObstructionFamily:
    """The full cactus-obstruction family at level k (1 <= k <= 4)."""
    exceptional = exceptional_obstruction(k)
    skip = canonical_form(exceptional)
    unions = tuple(
        g for g in disconnected_obstructions(k) if canonical_form(g) != skip
    )
    return CactusObstructionFamily(
        k=k,
        connected=generate_Z(k + 1),
        disconnected=unions,
        exceptional=exceptional,
    )


# -- cross-verification -----------------------------------------------------------


def connected_cacti_up_to(max_n: int) -> list[Graph]:
    """All connected bridgeless cacti with <= max_n vertices, up to isomorphism.

    Built by gluing cycles at single vertices (every bridgeless cactus arises
    this way); used as an independent candidate pool when re-checking that the
    butterfly-cacti are the only connected cactus obstructions.
    """
    from .graphs import cycle_graph

    def glue_cycle(g: Graph, v: int, length: int) -> Graph:
        n = g.n
        ring = [v] + list(range(n, n + length - 1))
        edges = list(g.edges()) + [
            (ring[i], ring[(i + 1) % length]) for i in range(length)
        ]
        return Graph(n + length - 1, edges)

    frontier: dict[bytes, Graph] = {}
    for r in range(3, max_n + 1):
        c = cycle_graph(r)
        frontier[canonical_form(c)] = c
    all_out = dict(frontier)
    while frontier:
        nxt: dict[bytes, Graph] = {}
        for g in frontier.values():
            for length in range(3, max_n - g.n + 1 + 1):
                if g.n + length - 1 > max_n:
                    continue
                for v in range(g.n):
                    h = glue_cycle(g, v, length)
                    key = canonical_form(h)
                    if key not in all_out:
                        nxt[key] = h
        all_out.update(nxt)
        frontier = nxt
    return sorted(all_out.values(), key=canonical_form)


@dataclass
class HolinessReport:
    """Cross-check of 'connected cactus obstructions = butterfly-cacti'."""

    k: int
    members: int
    all_members_verified: bool
    search_space: int | None
    search_matches: bool | None
    runtime_seconds: float
    complete: bool = True


def verify_holiness(k: int, budget_seconds: float | None = None) -> HolinessReport:
    """(a) every (k+1)-butterfly-cactus is a level-k obstruction;
    (b) for k <= 1, an independent cactus search finds nothing else connected.
    """
    t0 = time.perf_counter()
    members = generate_Z(k + 1)
    ok = True
    complete = True
    for b in members:
        if budget_seconds is not None and time.perf_counter() - t0 > budget_seconds:
            complete = False
            break
        if not is_obstruction(b.graph, k):
            ok = False
    space = matches = None
    if k <= 1 and complete:
        if k == 0:
            # every connected cactus on <= 6 vertices, from the full enumeration
            pool = [
                g
                for n in range(1, 7)
                for g in enumerate_graphs(n)
                if is_connected(g) and is_in_class(g, ClassId.CACTUS)
            ]
        else:
            # connected bridgeless cacti up to the size of the Z_{k+1} members
            pool = connected_cacti_up_to(5 + 4 * k)
        space = len(pool)
        found = {
            canonical_form(g)
            for g in pool
            if is_connected(g) and is_obstruction(g, k)
        }
        expected = {canonical_form(b.graph) for b in members}
        matches = found == expected
    return HolinessReport(
        k=k,
        members=len(members),
        all_members_verified=ok,
        search_space=space,
        search_matches=matches,
        runtime_seconds=time.perf_counter() - t0,
        complete=complete,
    )


def apex_forest_bound_check(g: Graph) -> bool:
    """Cactus bound: with r = max disjoint triangles embeddable as a minor,
    at most r deletions always suffice to reach a forest.

    Restates 'no (k+2) disjoint triangles as a minor implies a (k+1)-apex
    forest set' at the binding level k = r-1.  Raises for non-cacti.
    """
    if not is_in_class(g, ClassId.CACTUS):
        raise ValueError("apex_forest_bound_check expects a cactus")
    r = max_triangle_packing_in_cactus(g)
    return has_apex_set_within(g, ClassId.FOREST, r)

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from apexobs.canonical import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    enumerate_graphs,
    graphs_up_to,
)
from apexobs.graphs import Graph, complete_graph, cycle_graph, disjoint_union, make_named

from conftest import random_graph
from oracles import nx_isomorphic


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                edges.append((i, j))
    return Graph(n, edges)


class TestCanonicalForm:
    def test_relabelled_c4_equal(self):
        c4 = cycle_graph(4)
        assert canonical_form(c4) == canonical_form(c4.relabel([2, 0, 3, 1]))

    def test_c4_vs_k4_minus_differ(self):
        assert canonical_form(cycle_graph(4)) != canonical_form(make_named("K4-"))

    def test_eleven_graphs_on_four_vertices(self):
        # known census; distinctness double-checked by brute-force permutation
        graphs4 = enumerate_graphs(4)
        assert len(graphs4) == 11
        from itertools import permutations

        for a in graphs4:
            for b in graphs4:
                brute_iso = any(
                    a.relabel(p).adj == b.adj for p in permutations(range(4))
                )
                assert brute_iso == (canonical_form(a) == canonical_form(b))

    @settings(max_examples=150, deadline=None)
    @given(graphs(), st.randoms(use_true_random=False))
    def test_permutation_invariance(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))

    def test_equality_matches_networkx(self, rng):
        for _ in range(300):
            n = rng.randint(1, 8)
            g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            h = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            assert are_isomorphic(g, h) == nx_isomorphic(g, h)

    def test_canonical_graph_is_fixed_point(self, rng):
        for _ in range(50):
            g = random_graph(rng, rng.randint(0, 9), rng.random())
            cg = canonical_graph(g)
            assert canonical_form(cg) == canonical_form(g)
            assert canonical_graph(cg) == cg

    def test_labeling_realizes_form(self, rng):
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 9), rng.random())
            order = canonical_labeling(g)
            assert sorted(order) == list(range(g.n))

    def test_highly_symmetric(self):
        # automorphism-rich graphs must still canonicalize (and fast)
        for g in (
            complete_graph(12),
            Graph(12),
            disjoint_union(*[cycle_graph(3)] * 6),
            disjoint_union(*[cycle_graph(5)] * 3),
        ):
            perm = list(range(g.n))
            random.Random(1).shuffle(perm)
            assert canonical_form(g) == canonical_form(g.relabel(perm))


class TestEnumeration:
    def test_known_counts(self):
        # number of graphs on n unlabeled vertices
        expected = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
        for n, count in expected.items():
            assert len(enumerate_graphs(n)) == count

    def test_all_canonical_and_distinct(self):
        forms = [canonical_form(g) for g in enumerate_graphs(5)]
        assert len(set(forms)) == len(forms)
        for g in enumerate_graphs(5):
            assert canonical_graph(g) == g

    def test_graphs_up_to(self):
        assert len(graphs_up_to(6)) == 1 + 2 + 4 + 11 + 34 + 156

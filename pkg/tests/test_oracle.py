from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from p7cover.errors import CapacityError, InputError, NoSolutionError
from p7cover.graph import Graph
from p7cover.modular import is_module
from p7cover.oracle import (
    brute_minimal_separators,
    brute_modules,
    min_dominating_set_of,
    random_graph,
    random_ptfree,
)
from p7cover.paths import find_induced_pt
from p7cover.separators import is_minimal_separator

from conftest import graphs


class TestMinDominatingSet:
    def test_path_needs_two(self, p4):
        found = min_dominating_set_of(p4, range(4), range(4))
        assert len(found) == 2

    def test_star_center_suffices(self):
        g = Graph.from_edges([(0, i) for i in range(1, 6)])
        assert min_dominating_set_of(g, range(6), range(6)) == (0,)

    def test_target_member_can_cover_itself(self, p4):
        assert min_dominating_set_of(p4, (3,), (3,)) == (3,)

    def test_pool_restriction_matters(self, p4):
        assert min_dominating_set_of(p4, (0, 3), (1, 2)) == (1, 2)

    def test_undominable_raises(self):
        g = Graph.from_edges([(0, 1)], n=4)
        with pytest.raises(NoSolutionError):
            min_dominating_set_of(g, (3,), (0, 1))

    def test_pool_capacity_gate(self):
        g = Graph.from_edges([], n=30)
        with pytest.raises(CapacityError):
            min_dominating_set_of(g, range(30), range(30))

    @given(graphs(min_n=2, max_n=7))
    @settings(max_examples=40)
    def test_result_is_minimum_by_exhaustion(self, g):
        pool = tuple(range(g.n))
        found = min_dominating_set_of(g, pool, pool)
        tm = g.full_mask
        covered = 0
        for v in found:
            covered |= g.adj[v] | 1 << v
        assert tm & ~covered == 0
        for k in range(len(found)):
            for sub in combinations(pool, k):
                cm = 0
                for v in sub:
                    cm |= g.adj[v] | 1 << v
                assert tm & ~cm != 0


class TestBruteForcers:
    def test_modules_of_path(self, p4):
        assert brute_modules(p4, range(4)) == [
            (0,), (1,), (2,), (3,), (0, 1, 2, 3),
        ]

    def test_modules_match_predicate(self, c4):
        host = tuple(range(4))
        listed = set(brute_modules(c4, host))
        for r in range(1, 5):
            for sub in combinations(host, r):
                assert (sub in listed) == is_module(c4, host, sub)

    def test_separators_of_cycle(self, c4):
        assert brute_minimal_separators(c4) == [(0, 2), (1, 3)]

    def test_separator_capacity_gate(self):
        g = Graph.from_edges([], n=13)
        with pytest.raises(CapacityError):
            brute_minimal_separators(g)

    @given(graphs(max_n=7))
    def test_listed_separators_are_minimal(self, g):
        for s in brute_minimal_separators(g):
            assert is_minimal_separator(g, s)


class TestRandomGraphs:
    def test_determinism(self):
        assert random_graph(9, 0.4, 123) == random_graph(9, 0.4, 123)
        assert random_graph(9, 0.4, 123) != random_graph(9, 0.4, 124)

    def test_extreme_probabilities(self):
        assert random_graph(5, 0.0, 7).edges() == []
        assert len(random_graph(5, 1.0, 7).edges()) == 10

    def test_ptfree_clique_degenerate(self):
        # p=1 draws K6, which has no induced P4, so no repairs fire
        g = random_ptfree(6, 4, 1.0, 11)
        assert len(g.edges()) == 15
        assert find_induced_pt(g, 4) is None

    def test_ptfree_rejects_tiny_t(self):
        with pytest.raises(InputError):
            random_ptfree(5, 3, 0.5, 0)

    @given(
        st.integers(min_value=2, max_value=12),
        st.sampled_from((5, 6, 7)),
        st.sampled_from((0.2, 0.4, 0.6)),
        st.integers(min_value=0, max_value=5000),
    )
    @settings(max_examples=50)
    def test_ptfree_repair_holds(self, n, t, prob, seed):
        g = random_ptfree(n, t, prob, seed)
        assert g.n == n
        assert find_induced_pt(g, t) is None

    def test_ptfree_determinism(self):
        a = random_ptfree(10, 7, 0.35, 99)
        b = random_ptfree(10, 7, 0.35, 99)
        assert a == b

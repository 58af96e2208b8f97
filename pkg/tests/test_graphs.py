import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchcut import (
    Graph,
    GraphFormatError,
    bfs_distances,
    complete_bipartite,
    complete_graph,
    connected_components,
    contains_induced,
    cycle_graph,
    disjoint_union,
    distance_profile,
    find_dominating_set,
    find_induced,
    format_edge_text,
    girth,
    is_connected,
    is_dominating,
    parse_edge_text,
    path_graph,
    pattern_from_name,
    star_graph,
)
from .helpers import random_connected_graph


class TestGraphConstruction:
    def test_edges_are_normalized_and_deduplicated(self):
        g = Graph(4, [(2, 3), (1, 0), (2, 1), (0, 1)])
        assert g.edges == ((0, 1), (1, 2), (2, 3))
        assert g.m == 3

    def test_rejects_self_loop(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            Graph(3, [(1, 1)])

    def test_rejects_out_of_range_vertex(self):
        with pytest.raises(GraphFormatError, match="outside vertex range"):
            Graph(3, [(0, 3)])

    def test_degree_and_neighbours(self):
        g = star_graph(4)
        assert g.degree(0) == 4
        assert sorted(g.neighbours(0)) == [1, 2, 3, 4]
        assert g.adj_bits[1] == 1  # leaf sees only the hub

    def test_has_edge_is_symmetric(self):
        g = path_graph(3)
        assert g.has_edge(1, 0) and g.has_edge(0, 1)
        assert not g.has_edge(0, 2)


class TestEdgeListFormat:
    def test_parse_compacts_labels(self):
        g, labels = parse_edge_text("# comment\n3 5\n5 7\n7 3\n")
        assert (g.n, g.m) == (3, 3)
        assert labels == (3, 5, 7)

    def test_parse_reports_line_number(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_edge_text("0 1\nx y\n")

    def test_roundtrip(self):
        g = cycle_graph(5)
        h, labels = parse_edge_text(format_edge_text(g))
        assert h.edges == g.edges and labels == tuple(range(5))

    @given(st.integers(2, 7), st.randoms(use_true_random=False))
    @settings(max_examples=30, deadline=None)
    def test_roundtrip_random(self, n, rnd):
        g = random_connected_graph(n, rnd)
        h, _ = parse_edge_text(format_edge_text(g))
        assert h.edges == g.edges


class TestTraversal:
    def test_bfs_distances_on_path(self):
        assert bfs_distances(path_graph(5), 0) == [0, 1, 2, 3, 4]

    def test_bfs_unreachable_is_minus_one(self):
        g = Graph(3, [(0, 1)])
        assert bfs_distances(g, 0)[2] == -1

    def test_components_with_removed_edges(self):
        g = path_graph(4)
        comps = connected_components(g, removed_edges=[(1, 2)])
        assert sorted(map(sorted, comps)) == [[0, 1], [2, 3]]

    def test_components_with_removed_vertices(self):
        g = star_graph(3)
        comps = connected_components(g, removed_vertices=[0])
        assert len(comps) == 3

    def test_is_connected(self):
        assert is_connected(cycle_graph(4))
        assert not is_connected(Graph(2))


class TestDistanceProfile:
    def test_star_has_radius_one(self):
        prof = distance_profile(star_graph(5))
        assert (prof.radius, prof.diameter) == (1, 2)
        assert prof.center == frozenset({0})

    def test_path_five(self):
        prof = distance_profile(path_graph(5))
        assert (prof.radius, prof.diameter) == (2, 4)
        assert prof.center == frozenset({2})

    def test_subdivided_star_has_radius_two(self):
        # hub 0, spokes 1..4, pendants 5..8
        edges = [(0, i) for i in range(1, 5)] + [(i, i + 4) for i in range(1, 5)]
        prof = distance_profile(Graph(9, edges))
        assert prof.radius == 2 and 0 in prof.center


class TestGirth:
    @pytest.mark.parametrize("s", [3, 4, 5, 8])
    def test_cycles(self, s):
        assert girth(cycle_graph(s)) == s

    def test_forest_has_none(self):
        assert girth(path_graph(6)) is None

    def test_complete_bipartite(self):
        assert girth(complete_bipartite(2, 3)) == 4


class TestInducedSubgraph:
    def test_p4_inside_c5(self):
        hit = find_induced(cycle_graph(5), path_graph(4))
        assert hit is not None and len(hit) == 4

    def test_c4_not_inside_k4(self):
        # every 4-subset of K4 spans extra chords
        assert not contains_induced(complete_graph(4), cycle_graph(4))

    def test_claw_inside_star(self):
        assert contains_induced(star_graph(4), star_graph(3))

    def test_embedding_is_induced(self):
        g = random_connected_graph(8, random.Random(5))
        hit = find_induced(g, path_graph(4))
        if hit is not None:
            a, b, c, d = hit
            assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
            assert not (g.has_edge(a, c) or g.has_edge(a, d) or g.has_edge(b, d))

    @given(st.integers(4, 7), st.integers(2, 4), st.randoms(use_true_random=False))
    @settings(max_examples=40, deadline=None)
    def test_matches_subset_enumeration(self, n, k, rnd):
        host = random_connected_graph(n, rnd)
        pattern = path_graph(k)
        naive = any(
            Graph(k, [(i, j) for i, j in itertools.combinations(range(k), 2)
                      if host.has_edge(sub[i], sub[j])]).edges == pattern.edges
            for sub in itertools.permutations(range(n), k)
        )
        assert contains_induced(host, pattern) == naive


class TestDomination:
    def test_is_dominating(self):
        g = cycle_graph(6)
        assert is_dominating(g, {0, 3})
        assert not is_dominating(g, {0})

    def test_find_dominating_set_respects_bound(self):
        g = cycle_graph(6)
        assert find_dominating_set(g, 1) is None
        d = find_dominating_set(g, 2)
        assert d is not None and len(d) <= 2 and is_dominating(g, d)

    def test_found_set_is_smallest(self):
        g = star_graph(4)
        assert find_dominating_set(g, 3) == frozenset({0})


class TestCatalog:
    @pytest.mark.parametrize(
        "name,n,m",
        [("P6", 6, 5), ("C5", 5, 5), ("K4", 4, 6), ("K2,3", 5, 6),
         ("K1,3", 4, 3), ("2P3", 6, 4), ("P3+P6", 9, 7)],
    )
    def test_names(self, name, n, m):
        g = pattern_from_name(name)
        assert (g.n, g.m) == (n, m)

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            pattern_from_name("Q7")

    def test_disjoint_union_offsets_labels(self):
        g = disjoint_union(path_graph(3), path_graph(3))
        assert g.n == 6 and g.m == 4
        assert not is_connected(g)

import random
from itertools import combinations

import networkx as nx
import pytest

from sfvs import (
    Graph,
    GraphError,
    block_decomposition,
    find_independent_set,
    independence_at_most,
    induced_subgraph,
    is_s_forest,
    max_independent_set,
    neighborhood,
)

from conftest import (
    atlas_graphs,
    complete_graph,
    cycle_graph,
    naive_is_s_forest,
    path_graph,
    random_graph,
    random_subset,
)


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph(2, [(1, 1)])

    def test_rejects_parallel_edge(self):
        with pytest.raises(GraphError):
            Graph(2, [(1, 2), (2, 1)])

    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(GraphError):
            Graph(2, [(1, 3)])

    def test_rejects_nonpositive_weight(self):
        with pytest.raises(GraphError):
            Graph(1, [], {1: 0})

    def test_default_weights_are_one(self):
        g = Graph(3, [(1, 2)])
        assert [g.weight(v) for v in g.vertices()] == [1, 1, 1]
        assert g.total_weight() == 3


class TestInducedSubgraph:
    def test_identity_on_k3(self):
        k3 = complete_graph(3)
        sub, back = induced_subgraph(k3, [1, 2, 3])
        assert sub == k3
        assert back == (1, 2, 3)

    def test_k3_two_vertices_is_an_edge(self):
        sub, back = induced_subgraph(complete_graph(3), [1, 2])
        assert sub.n == 2 and sub.edges == frozenset({(1, 2)})
        assert back == (1, 2)

    def test_p4_endpoints_are_isolated(self):
        sub, back = induced_subgraph(path_graph(4), [1, 3])
        assert sub.n == 2 and not sub.edges
        assert back == (1, 3)

    def test_weights_follow_the_bijection(self):
        g = path_graph(3, weights={1: 5, 2: 7, 3: 9})
        sub, back = induced_subgraph(g, [2, 3])
        assert back == (2, 3)
        assert (sub.weight(1), sub.weight(2)) == (7, 9)


class TestNeighborhood:
    def test_open_middle_of_path(self):
        assert neighborhood(path_graph(3), [2]) == (1, 3)

    def test_closed_middle_of_path(self):
        assert neighborhood(path_graph(3), [2], closed=True) == (1, 2, 3)

    def test_empty_set(self):
        assert neighborhood(path_graph(3), []) == ()
        assert neighborhood(path_graph(3), [], closed=True) == ()


class TestBlocks:
    def test_path_gives_two_bridges(self):
        dec = block_decomposition(path_graph(3))
        assert dec.blocks == ((1, 2), (2, 3))
        assert dec.bridges == frozenset({(1, 2), (2, 3)})

    def test_k4_is_one_block(self):
        dec = block_decomposition(complete_graph(4))
        assert dec.blocks == ((1, 2, 3, 4),)
        assert not dec.bridges

    def test_two_triangles_sharing_a_vertex(self):
        g = Graph(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
        dec = block_decomposition(g)
        assert dec.blocks == ((1, 2, 3), (3, 4, 5))

    def test_every_edge_in_exactly_one_block(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 9), rng.random())
            dec = block_decomposition(g)
            counted = [e for b in dec.blocks for e in g.edges if set(e) <= set(b)]
            assert sorted(counted) == sorted(g.edges)

    def test_agrees_with_networkx(self, rng):
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 10), rng.random())
            G = nx.Graph()
            G.add_nodes_from(g.vertices())
            G.add_edges_from(g.edges)
            want = sorted(
                tuple(sorted(c)) for c in nx.biconnected_components(G) if len(c) > 1
            )
            assert list(block_decomposition(g).blocks) == want


class TestSForest:
    def test_triangle_through_s_vertex(self):
        assert not is_s_forest(complete_graph(3), [1, 2, 3], [1])

    def test_no_s_vertex_no_s_cycle(self):
        assert is_s_forest(complete_graph(3), [1, 2, 3], [])

    def test_c4_minus_vertex_is_a_path(self):
        assert is_s_forest(cycle_graph(4), [1, 2, 3], [1])

    def test_s_outside_x_is_ignored(self):
        g = Graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
        assert is_s_forest(g, [3, 4], [1, 2])

    def test_exhaustive_against_naive_on_atlas(self):
        for g in atlas_graphs(5):
            verts = list(g.vertices())
            for rx in range(len(verts) + 1):
                for x in combinations(verts, rx):
                    for rs in range(len(x) + 1):
                        for s in combinations(x, rs):
                            assert is_s_forest(g, x, s) == naive_is_s_forest(g, x, s), (
                                g.edges,
                                x,
                                s,
                            )

    def test_randomized_against_naive_up_to_ten(self, rng):
        for _ in range(150):
            n = rng.randint(1, 10)
            g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
            x = random_subset(rng, n, 0.7)
            s = tuple(v for v in x if rng.random() < 0.5)
            assert is_s_forest(g, x, s) == naive_is_s_forest(g, x, s)

    def test_accepted_forests_keep_few_s_vertices_under_bounded_alpha(self, rng):
        from conftest import random_bounded_alpha

        for _ in range(120):
            d = rng.choice([1, 2, 3])
            n = rng.randint(1, 9)
            g = random_bounded_alpha(rng, n, d, 0.4)
            x = random_subset(rng, n, 0.8)
            s = random_subset(rng, n, 0.6)
            if is_s_forest(g, x, s):
                assert len(set(x) & set(s)) <= 2 * d


class TestIndependence:
    def test_clique_has_alpha_one(self):
        assert independence_at_most(complete_graph(5), 1)

    def test_c4_alpha_two(self):
        assert not independence_at_most(cycle_graph(4), 1)
        assert independence_at_most(cycle_graph(4), 2)

    def test_three_disjoint_edges(self):
        g = Graph(6, [(1, 2), (3, 4), (5, 6)])
        assert not independence_at_most(g, 2)
        assert independence_at_most(g, 3)

    def test_max_independent_set_examples(self):
        assert max_independent_set(complete_graph(4)) == (1,)
        assert max_independent_set(Graph(5)) == (1, 2, 3, 4, 5)
        assert max_independent_set(cycle_graph(5)) == (1, 3)

    def test_witness_is_independent_and_lex_smallest(self):
        g = Graph(4, [(1, 2)])
        assert find_independent_set(g, 2) == (1, 3)
        assert find_independent_set(g, 3) == (1, 3, 4)
        assert find_independent_set(g, 4) is None

    def test_bound_matches_maximum_on_atlas(self):
        for g in atlas_graphs(6):
            alpha = len(max_independent_set(g))
            for d in range(1, g.n + 1):
                assert independence_at_most(g, d) == (alpha <= d)

    def test_bound_matches_maximum_randomized(self, rng):
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 10), rng.random())
            alpha = len(max_independent_set(g))
            members = max_independent_set(g)
            for u in members:
                assert not set(g.neighbors(u)) & set(members)
            for d in (1, 2, 3, 4):
                assert independence_at_most(g, d) == (alpha <= d)

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarcog import graph as gr
from polarcog.graph import Graph

from conftest import graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def k2s(m):
    g = Graph.empty(0)
    for _ in range(m):
        g = gr.disjoint_union(g, gr.complete(2))
    return g


F1 = gr.disjoint_union(k2s(3), Graph.empty(1))


class TestGraphValidation:
    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))

    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph(1, (0b1,))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, (0b100, 0))

    def test_empty_graph_is_valid(self):
        g = Graph.empty(0)
        assert g.n == 0 and g.edges() == []


class TestConstructors:
    def test_triangle(self):
        g = gr.make_basic("complete", [3])
        assert g.n == 3 and g.num_edges() == 3

    def test_complete_multipartite_222(self):
        g = gr.make_basic("complete_multipartite", [2, 2, 2])
        assert g.n == 6 and g.num_edges() == 12

    def test_path_is_p4(self):
        g = gr.make_basic("path", [4])
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_cycle_needs_three(self):
        with pytest.raises(ValueError):
            gr.cycle(2)

    @pytest.mark.parametrize("kind,params", [("path", [-1]), ("path", [2, 3]), ("star", [3])])
    def test_bad_params(self, kind, params):
        with pytest.raises(ValueError):
            gr.make_basic(kind, params)


class TestOperations:
    def test_union_of_two_k2(self):
        g = gr.disjoint_union(gr.complete(2), gr.complete(2))
        assert (g.n, g.num_edges()) == (4, 2)
        assert g.edges() == [(0, 1), (2, 3)]

    def test_union_with_empty_is_identity(self):
        g = gr.cycle(5)
        assert gr.disjoint_union(g, Graph.empty(0)) == g
        assert gr.join(Graph.empty(0), g) == g

    def test_f1_from_chained_unions(self):
        assert F1.n == 7 and F1.num_edges() == 3

    def test_join_of_singletons(self):
        assert gr.join(Graph.empty(1), Graph.empty(1)) == gr.complete(2)

    def test_join_of_2k1_is_c4(self):
        assert gr.is_isomorphic(gr.join(Graph.empty(2), Graph.empty(2)), gr.cycle(4))

    def test_join_block_of_f23(self):
        g = gr.join(gr.disjoint_union(gr.complete(3), gr.complete(3)), Graph.empty(1))
        assert g.n == 7 and g.num_edges() == 12

    def test_complement_of_3k2(self):
        assert gr.is_isomorphic(gr.complement(k2s(3)), gr.complete_multipartite([2, 2, 2]))

    def test_complement_of_2k2_plus_k1_is_connected(self):
        g = gr.complement(gr.disjoint_union(k2s(2), Graph.empty(1)))
        assert g.n == 5 and gr.is_connected(g)

    def test_switch_isolated_vertex(self):
        g = gr.disjoint_union(Graph.empty(1), gr.complete(2))
        assert gr.switch_vertex(g, 0) == gr.complete(3)

    def test_partial_complement_examples(self):
        assert gr.partial_complement(k2s(2), [0]) == Graph.empty(4)
        comps = gr.components(F1)
        side = [i for i, m in enumerate(comps) if gr.popcount(m) == 2]
        f5 = gr.disjoint_union(gr.complement(k2s(3)), Graph.empty(1))
        assert gr.is_isomorphic(gr.partial_complement(F1, side), f5)
        assert gr.partial_complement(F1, range(len(comps))) == gr.complement(F1)
        assert gr.partial_complement(F1, []) == gr.complement(F1)

    def test_partial_complement_bad_index(self):
        with pytest.raises(ValueError):
            gr.partial_complement(F1, [9])

    def test_components(self):
        assert sorted(gr.popcount(m) for m in gr.components(F1)) == [1, 2, 2, 2]
        assert len(gr.components(gr.complete_multipartite([3, 3]))) == 1

    def test_induced_subgraph(self):
        c4 = gr.cycle(4)
        assert gr.induced_subgraph(c4, c4.all_vertices) == c4
        assert gr.induced_subgraph(c4, 0b0101) == Graph.empty(2)
        iso = next(v for v in range(7) if F1.degree(v) == 0)
        assert gr.is_isomorphic(gr.delete_vertex(F1, iso), k2s(3))


class TestIsomorphism:
    def test_examples(self):
        assert gr.is_isomorphic(gr.cycle(4), gr.complete_multipartite([2, 2]))
        assert not gr.is_isomorphic(k2s(2), gr.path(4))

    def test_find_isomorphism_maps_edges(self):
        g = gr.cycle(6)
        perm = [3, 5, 0, 1, 4, 2]
        h = gr.relabel(g, perm)
        m = gr.find_isomorphism(g, h)
        assert m is not None
        assert all(h.has_edge(m[u], m[v]) for u, v in g.edges())

    def test_canonical_form_matches_isomorphism_exhaustively(self):
        for n in range(1, 6):
            labelled = list(gr.all_labeled_graphs(n))
            sample = labelled if n <= 4 else random.Random(n).sample(labelled, 120)
            for g1, g2 in itertools.combinations(sample, 2):
                same = gr.canonical_form(g1) == gr.canonical_form(g2)
                assert same == nx.is_isomorphic(to_nx(g1), to_nx(g2))

    def test_census_matches_networkx_atlas(self):
        atlas = nx.graph_atlas_g()
        for n in range(1, 8):
            assert len(gr.graphs_up_to_iso(n)) == sum(1 for h in atlas if h.number_of_nodes() == n)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9), st.randoms(use_true_random=False))
    def test_canonical_form_is_label_invariant(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = gr.relabel(g, perm)
        assert gr.canonical_form(g) == gr.canonical_form(h)
        assert gr.is_isomorphic(g, h)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=7), graphs(max_n=7))
    def test_isomorphism_agrees_with_networkx(self, g1, g2):
        assert gr.is_isomorphic(g1, g2) == nx.is_isomorphic(to_nx(g1), to_nx(g2))


class TestInducedEmbedding:
    def test_2k2_not_in_c4(self):
        assert gr.find_induced_embedding(k2s(2), gr.cycle(4)) is None

    def test_f1_in_larger_host(self):
        host = gr.disjoint_union(F1, gr.complete(3))
        emb = gr.find_induced_embedding(F1, host)
        assert emb is not None
        assert gr.induced_subgraph(host, gr.mask_of(emb)).n == 7
        for u in range(7):
            for v in range(u + 1, 7):
                assert F1.has_edge(u, v) == host.has_edge(emb[u], emb[v])

    def test_p4_not_in_cographs(self):
        from polarcog.cograph import enumerate_cographs

        for n in range(4, 8):
            for t in enumerate_cographs(n):
                assert gr.find_induced_embedding(gr.path(4), t.to_graph()) is None

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=5), graphs(max_n=8))
    def test_agrees_with_networkx_matcher(self, pattern, host):
        from networkx.algorithms import isomorphism

        expected = isomorphism.GraphMatcher(to_nx(host), to_nx(pattern)).subgraph_is_isomorphic()
        assert (gr.find_induced_embedding(pattern, host) is not None) == expected


class TestProperties:
    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=7), graphs(max_n=7))
    def test_de_morgan(self, g1, g2):
        left = gr.complement(gr.disjoint_union(g1, g2))
        right = gr.join(gr.complement(g1), gr.complement(g2))
        assert left == right

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=9))
    def test_involutions(self, g):
        assert gr.complement(gr.complement(g)) == g
        for v in range(g.n):
            assert gr.switch_vertex(gr.switch_vertex(g, v), v) == g
        m = len(gr.components(g))
        side = list(range(0, m, 2))
        # components of the result may be numbered differently, so compare
        # by recomputing the side from the original vertex sets
        once = gr.partial_complement(g, side)
        first = 0
        for i in side:
            first |= gr.components(g)[i]
        comps = gr.components(once)
        back_side = [i for i, c in enumerate(comps) if c & first]
        if first and first != g.all_vertices:
            assert gr.partial_complement(once, back_side) == g

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=7), graphs(max_n=7))
    def test_component_counts_add(self, g1, g2):
        assert len(gr.components(gr.disjoint_union(g1, g2))) == len(gr.components(g1)) + len(gr.components(g2))

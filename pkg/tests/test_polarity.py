import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarcog import graph as gr
from polarcog.catalog import family_member
from polarcog.cograph import NotCographError, build_cotree, enumerate_codes, graph_from_code
from polarcog.graph import Graph
from polarcog.polarity import (
    PolarPartition,
    brute_force_signature,
    brute_force_sk_polar,
    code_signature,
    extract_partition,
    is_monopolar,
    is_polar,
    is_sk_polar,
    signature,
    validate_partition,
)

from conftest import cographs, graphs, labeling_signature

F1 = family_member(1, 2)


class TestSignature:
    def test_leaf(self):
        assert signature(build_cotree(Graph.empty(1)), 2, 2) == {(1, 0), (0, 1)}

    def test_k2(self):
        assert signature(build_cotree(gr.complete(2)), 2, 2) == {(2, 0), (1, 1), (0, 1)}

    def test_2k1(self):
        assert signature(build_cotree(Graph.empty(2)), 2, 2) == {(1, 0), (1, 1), (0, 2)}

    def test_empty_graph(self):
        assert code_signature("", 2, 2) == {(0, 0)}

    def test_matches_subset_oracle_up_to_seven(self):
        for n in range(1, 8):
            for code in enumerate_codes(n):
                g = graph_from_code(code)
                assert code_signature(code, n, n) == brute_force_signature(g)

    def test_subset_oracle_matches_labelling_oracle(self):
        # the subset oracle relies on parts being forced once A is chosen
        for n in range(1, 6):
            cap = min(n, 3)
            for g in gr.graphs_up_to_iso(n):
                expected = {pq for pq in brute_force_signature(g) if max(pq) <= cap}
                assert labeling_signature(g, cap, cap) == expected


class TestDecision:
    def test_examples(self):
        assert not is_sk_polar(F1, 2, 2)
        assert all(is_sk_polar(gr.complete(n), 0, 1) for n in range(1, 6))
        assert not is_sk_polar(gr.cycle(4), 1, 1)

    def test_non_cograph_refused(self):
        with pytest.raises(NotCographError):
            is_sk_polar(gr.path(4))

    def test_negative_cap(self):
        with pytest.raises(ValueError):
            is_sk_polar(gr.complete(2), -1, 2)

    def test_empty_graph(self):
        assert is_sk_polar(Graph.empty(0), 0, 0)

    def test_polar_and_monopolar(self):
        assert is_polar(F1)
        assert is_monopolar(gr.disjoint_union(gr.cycle(4), gr.cycle(4)))
        wheel = gr.join(gr.cycle(4), Graph.empty(1))
        assert not is_monopolar(wheel)
        assert is_monopolar(wheel, disjunctive=True)
        co_wheel = gr.complement(wheel)
        assert is_monopolar(co_wheel)

    def test_agrees_with_oracle_all_caps(self):
        for n in range(1, 8):
            for code in enumerate_codes(n):
                g = graph_from_code(code)
                for s in range(4):
                    for k in range(4):
                        assert is_sk_polar(g, s, k) == brute_force_sk_polar(g, s, k)

    def test_oracle_size_limit(self):
        with pytest.raises(ValueError):
            brute_force_sk_polar(Graph.empty(13), 2, 2)

    @settings(max_examples=60, deadline=None)
    @given(cographs(max_n=12), st.integers(0, 3), st.integers(0, 3))
    def test_monotone_in_caps(self, g, s, k):
        if is_sk_polar(g, s, k):
            assert is_sk_polar(g, s + 1, k) and is_sk_polar(g, s, k + 1)

    @settings(max_examples=60, deadline=None)
    @given(cographs(max_n=12), st.integers(0, 3), st.integers(0, 3))
    def test_complement_swaps_caps(self, g, s, k):
        assert is_sk_polar(g, s, k) == is_sk_polar(gr.complement(g), k, s)


class TestPartition:
    def test_c4_antipodal(self):
        part = extract_partition(build_cotree(gr.cycle(4)), 2, 2)
        assert part == PolarPartition(((0, 2), (1, 3)), ())

    def test_p3(self):
        part = extract_partition(build_cotree(gr.path(3)), 2, 2)
        assert part.counts == (2, 0)
        assert sorted(part.a_parts) == [(0, 2), (1,)]

    def test_k3(self):
        part = extract_partition(build_cotree(gr.complete(3)), 2, 2)
        assert part == PolarPartition((), ((0, 1, 2),))

    def test_obstruction_has_none(self):
        assert extract_partition(build_cotree(F1), 2, 2) is None

    def test_validate_examples(self):
        c4 = gr.cycle(4)
        assert validate_partition(c4, PolarPartition(((0, 2), (1, 3)), ()), 2, 2)
        assert not validate_partition(gr.complete(2), PolarPartition(((0, 1),), ()), 2, 2)
        two_k2 = gr.disjoint_union(gr.complete(2), gr.complete(2))
        assert validate_partition(two_k2, PolarPartition((), ((0, 1), (2, 3))), 0, 2)

    def test_validate_rejects_bad_cover(self):
        g = gr.complete(3)
        assert not validate_partition(g, PolarPartition((), ((0, 1),)), 2, 2)
        assert not validate_partition(g, PolarPartition((), ((0, 1, 2), ())), 2, 2)
        assert not validate_partition(g, PolarPartition(((0,),), ((0, 1, 2),)), 2, 2)

    def test_validate_caps(self):
        g = Graph.empty(3)
        assert not validate_partition(g, PolarPartition((), ((0,), (1,), (2,))), 2, 2)

    def test_labels(self):
        part = PolarPartition(((0, 2),), ((1,),))
        assert part.labels(3) == [("A", 1), ("B", 1), ("A", 1)]
        assert part.to_json() == {"a_parts": [[0, 2]], "b_cliques": [[1]]}

    @settings(max_examples=100, deadline=None)
    @given(cographs(max_n=20), st.integers(0, 3), st.integers(0, 3))
    def test_witness_soundness(self, g, s, k):
        part = extract_partition(build_cotree(g), s, k)
        assert (part is not None) == is_sk_polar(g, s, k)
        if part is not None:
            assert validate_partition(g, part, s, k)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), st.integers(0, 2), st.integers(0, 2))
def test_oracle_on_arbitrary_graphs(g, s, k):
    expected = any(p <= s and q <= k for p, q in labeling_signature(g, s, k))
    assert brute_force_sk_polar(g, s, k) == expected

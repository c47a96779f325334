from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import hypergraphs
from oracles import brute_link, brute_min_positive_degree, brute_shadow, edge_sets
from unicolor import (
    Hypergraph,
    VertexSet,
    build_nested_sunflowers,
    degree,
    format_rational,
    has_isolated,
    hkr,
    link,
    min_positive_degree,
    pair_covered,
    parse_rational,
    shadow,
)


class TestHypergraph:
    def test_canonical_storage(self):
        a = Hypergraph(3, 5, [(3, 2, 1), (5, 4, 1), (1, 2, 3)])
        b = Hypergraph(3, 5, [(1, 4, 5), (1, 2, 3)])
        assert a == b
        assert hash(a) == hash(b)
        assert a.edges == ((1, 2, 3), (1, 4, 5))
        assert (2, 1, 3) in a and (1, 2, 4) not in a

    @pytest.mark.parametrize(
        "edges",
        [[(1, 2)], [(1, 1, 2)], [(0, 1, 2)], [(1, 2, 9)]],
    )
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(ValueError):
            Hypergraph(3, 5, edges)

    def test_large_labels_fall_back_to_row_sort(self):
        # (n+1)^r overflows int64 keys here
        n = 10**6
        H = Hypergraph(4, n, [(n, n - 1, 1, 2), (1, 2, 3, 4), (4, 3, 2, 1)])
        assert H.edges == ((1, 2, 3, 4), (1, 2, n - 1, n))
        assert len(shadow(H, 1)) == 8

    def test_edge_array_is_read_only(self, k43):
        with pytest.raises(ValueError):
            k43.edge_array[0, 0] = 2


class TestShadow:
    def test_k43_pairs(self, k43):
        assert shadow(k43, 1).edges == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

    def test_single_edge_vertices(self, single):
        assert shadow(single, 2).edges == ((1,), (2,), (3,))

    def test_h331(self, h331):
        H, _, _ = h331
        assert len(shadow(H, 1)) == 6
        assert edge_sets(shadow(H, 1)) == brute_shadow(H.edges, 3, 1)

    def test_zero_is_identity(self, k43):
        assert shadow(k43, 0) is k43

    @pytest.mark.parametrize("i", [-1, 3, 4])
    def test_order_out_of_range(self, k43, i):
        with pytest.raises(ValueError):
            shadow(k43, i)

    @given(hypergraphs(min_r=2), st.data())
    def test_composition(self, H, data):
        i = data.draw(st.integers(0, H.r - 1))
        j = data.draw(st.integers(0, H.r - 1 - i))
        assert shadow(shadow(H, i), j) == shadow(H, i + j)

    @given(hypergraphs(min_r=2))
    def test_matches_brute_force(self, H):
        for i in range(1, H.r):
            assert edge_sets(shadow(H, i)) == brute_shadow(H.edges, H.r, i)
            if len(H):
                assert len(shadow(H, i)) > 0


class TestLinkDegree:
    def test_k43(self, k43):
        assert link(k43, {1, 2}).edges == ((3,), (4,))
        assert degree(k43, {1, 2}) == 2

    def test_single_edge(self, single):
        assert link(single, {1}).edges == ((2, 3),)
        assert degree(single, VertexSet([1, 2])) == 1

    def test_h332(self):
        H, _, _ = hkr(3, 3, 2, 1)
        assert link(H, {3}).edges == ((1, 5), (2, 5))
        assert degree(H, {1}) == 2

    @pytest.mark.parametrize("S", [set(), {1, 2, 3}, {1, 9}])
    def test_bad_sets(self, k43, S):
        with pytest.raises(ValueError):
            link(k43, S)

    @given(hypergraphs(min_r=2, nonempty=True), st.data())
    def test_link_matches_brute_force(self, H, data):
        size = data.draw(st.integers(1, H.r - 1))
        S = data.draw(st.sets(st.integers(1, H.n), min_size=size, max_size=size))
        assert edge_sets(link(H, S)) == brute_link(H.edges, S)
        assert degree(H, S) == len(brute_link(H.edges, S))

    @given(hypergraphs(min_r=2))
    def test_handshake(self, H):
        assert sum(degree(H, {v}) for v in H.vertices) == H.r * len(H)
        codegrees = [degree(H, s) for s in shadow(H, 1).edges]
        assert sum(codegrees) == H.r * len(H)


class TestMinPositiveDegree:
    def test_single(self, single):
        assert min_positive_degree(single, 2) == 1

    def test_h333_codegree(self):
        H, _, _ = hkr(3, 3, 3, 1)
        assert (H.n, len(H)) == (7, 6)
        assert min_positive_degree(H, 2) == 1 == Fraction(1, 7) * H.n

    def test_h332_vertex_degree(self):
        H, _, _ = hkr(3, 3, 2, 1)
        assert min_positive_degree(H, 1) == 2 == Fraction(H.n**2, 18)

    def test_empty_is_absent(self):
        assert min_positive_degree(Hypergraph(3, 4), 2) is None

    @given(hypergraphs(min_r=2))
    def test_matches_brute_force(self, H):
        for i in range(1, H.r):
            got = min_positive_degree(H, i)
            assert got == brute_min_positive_degree(H.edges, H.r, i)
            if len(H):
                assert got >= 1


class TestIsolatedAndPairs:
    def test_isolated(self):
        assert not has_isolated(Hypergraph(3, 3, [(1, 2, 3)]))
        assert has_isolated(Hypergraph(3, 4, [(1, 2, 3)]))

    def test_pairs(self, k43, h331):
        assert pair_covered(k43, 1, 4)
        H, _, _ = h331
        # V_{2,1} = {2}, V_{2,2} = {3}
        assert not pair_covered(H, 2, 3)
        with pytest.raises(ValueError):
            pair_covered(k43, 2, 2)

    def test_nested_sunflowers_cover_all_pairs(self):
        H = build_nested_sunflowers(3, 7)
        assert all(pair_covered(H, u, v) for u in range(1, 8) for v in range(u + 1, 8))

    @given(hypergraphs(min_r=2, max_n=6), st.data())
    def test_pairs_match_shadow(self, H, data):
        u, v = data.draw(st.lists(st.integers(1, H.n), min_size=2, max_size=2, unique=True))
        assert pair_covered(H, u, v) == ((min(u, v), max(u, v)) in shadow(H, H.r - 2))


class TestVertexSet:
    def test_basic(self):
        s = VertexSet([3, 1, 5])
        assert list(s) == [1, 3, 5] and len(s) == 3 and 3 in s and 2 not in s
        assert s.max() == 5
        with pytest.raises(ValueError):
            VertexSet([0])

    @given(st.sets(st.integers(1, 70)), st.sets(st.integers(1, 70)))
    def test_algebra(self, a, b):
        A, B = VertexSet(a), VertexSet(b)
        assert set(A | B) == a | b and set(A & B) == a & b and set(A - B) == a - b
        assert len(A | B) + len(A & B) == len(A) + len(B)
        assert (A & B) <= A and (A | B) >= B
        assert (A ^ B) == (A - B) | (B - A)


class TestRationals:
    @pytest.mark.parametrize("text,value", [("7/22", Fraction(7, 22)), ("4/2", Fraction(2)), ("-3", Fraction(-3))])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["0.5", "1/0", "a/b", ""])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_format(self):
        assert format_rational(Fraction(6, 4)) == "3/2"
        assert format_rational(6) == "6/1"


def test_subset_degrees_cached_and_consistent(k43):
    rows, counts = k43.subset_degrees(2)
    assert rows.shape == (6, 2) and set(counts.tolist()) == {2}
    assert k43.subset_degrees(2)[0] is rows
    assert np.array_equal(k43.vertex_degrees()[1:], [3, 3, 3, 3])

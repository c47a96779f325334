from fractions import Fraction
from itertools import combinations
from math import prod

import pytest
from hypothesis import given, strategies as st

from oracles import brute_is_proper, brute_min_positive_degree, construction_by_definition, edge_sets
from unicolor import (
    ConstructionSpec,
    build_construction,
    build_nested_sunflowers,
    build_quasi_sunflower,
    complete_kpartite,
    has_isolated,
    hkr,
    is_proper,
    min_positive_degree,
    random_kpartite,
    sample_kpartite_above,
)
from unicolor.constructions import compositions, kpartite_feasible, trial_rng
from unicolor.thresholds import phi

SMALL = [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4), (5, 3), (5, 4)]


class TestConstruction:
    def test_h331_exact(self, h331):
        H, psi1, psi2 = h331
        assert H.edges == ((1, 2, 4), (1, 3, 5))
        assert psi1.assignment == (1, 2, 2, 3, 3)
        assert psi2.assignment == (1, 2, 3, 3, 2)

    @pytest.mark.parametrize("k,r", SMALL)
    @pytest.mark.parametrize("alpha", [1, 2, 3, Fraction(3, 2)])
    @pytest.mark.parametrize("m", [1, 2])
    def test_matches_definition(self, k, r, alpha, m):
        spec = ConstructionSpec(k, r, Fraction(alpha), m)
        H, psi1, psi2 = build_construction(spec)
        edges, n = construction_by_definition(k, r, spec.block, m)
        assert H.n == n == (k - 2) * spec.block + 4 * m
        assert edge_sets(H) == edges
        assert not has_isolated(H)
        assert brute_is_proper(H.edges, r, psi1.assignment)
        assert brute_is_proper(H.edges, r, psi2.assignment)
        assert psi1.assignment != psi2.assignment

    @pytest.mark.parametrize("k,r", SMALL)
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_codegree_formulas(self, k, r, m):
        for alpha, coeff, size in ((1, k - r + 1, k + 2), (3, 3 * k - 3 * r + 1, 3 * k - 2)):
            H, _, _ = hkr(k, r, alpha, m)
            assert H.n == size * m
            assert min_positive_degree(H, r - 1) == coeff * m
        small = hkr(k, r, 1, 1)[0]
        assert min_positive_degree(small, r - 1) == brute_min_positive_degree(small.edges, r, r - 1)

    def test_block_floor(self):
        spec = ConstructionSpec(4, 3, Fraction(5, 2), 3)
        assert spec.block == 7 and spec.n == 2 * 7 + 12

    @pytest.mark.parametrize(
        "args",
        [(2, 3, 1, 1), (3, 1, 1, 1), (3, 3, 0, 1), (3, 3, 1, 0), (3, 3, Fraction(1, 2), 1)],
    )
    def test_bad_parameters(self, args):
        k, r, alpha, m = args
        with pytest.raises(ValueError):
            ConstructionSpec(k, r, Fraction(alpha), m)


class TestSunflowers:
    @pytest.mark.parametrize(
        "m,edges",
        [
            (5, ((1, 2, 5), (3, 4, 5))),
            (6, ((1, 2, 6), (3, 4, 6), (4, 5, 6))),
            (7, ((1, 2, 7), (3, 4, 7), (5, 6, 7))),
        ],
    )
    def test_small_r3(self, m, edges):
        assert build_quasi_sunflower(3, m).edges == edges

    @pytest.mark.parametrize("r", [2, 3, 4, 5])
    @pytest.mark.parametrize("m", range(2, 13))
    def test_shape(self, r, m):
        if m < r:
            with pytest.raises(ValueError):
                build_quasi_sunflower(r, m)
            return
        H = build_quasi_sunflower(r, m)
        assert len(H) <= (m - 1) // (r - 1) + 1
        assert all(m in e for e in H.edges)
        assert not has_isolated(H)

    def test_nested_graph_case_is_complete(self):
        assert len(build_nested_sunflowers(2, 4)) == 6

    def test_nested_count(self):
        # distinct edges over j = 3..7: 1 + 2 + 2 + 3 + 3
        assert len(build_nested_sunflowers(3, 7)) == 11


class TestKPartite:
    @pytest.mark.parametrize("r,sizes", [(3, (2, 2, 2)), (3, (1, 2, 3, 1)), (2, (3, 4)), (4, (1, 1, 2, 2, 1))])
    def test_complete_count(self, r, sizes):
        H, c = complete_kpartite(r, sizes)
        expected = sum(prod(sizes[p] for p in parts) for parts in combinations(range(len(sizes)), r))
        assert len(H) == expected
        assert is_proper(H, c) and c.sizes() == tuple(sizes)

    def test_too_few_parts(self):
        with pytest.raises(ValueError):
            complete_kpartite(3, (2, 2))

    def test_compositions(self):
        assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
        assert len(list(compositions(9, 4))) == 56

    def test_random_kpartite_deterministic(self):
        a, _ = random_kpartite(3, (2, 2, 3), 0.5, trial_rng(5, 0))
        b, _ = random_kpartite(3, (2, 2, 3), 0.5, trial_rng(5, 0))
        assert a == b


class TestSampler:
    def test_deterministic(self):
        first = list(sample_kpartite_above(3, 3, (2, 3, 3), Fraction(1, 5), 20, 11))
        again = list(sample_kpartite_above(3, 3, (2, 3, 3), Fraction(1, 5), 20, 11))
        assert first == again and len(first) == 20

    def test_trials_are_independent_of_count(self):
        short = list(sample_kpartite_above(3, 3, (2, 3, 3), Fraction(1, 5), 5, 11))
        long = list(sample_kpartite_above(3, 3, (2, 3, 3), Fraction(1, 5), 10, 11))
        assert long[:5] == short

    @given(st.integers(0, 2**32), st.sampled_from([(3, 3, (2, 3, 3)), (4, 3, (2, 2, 2, 3)), (3, 2, (2, 3, 3))]))
    def test_constraints(self, seed, case):
        k, r, sizes = case
        threshold = phi(k, r)
        host, coloring = complete_kpartite(r, sizes)
        for H in sample_kpartite_above(k, r, sizes, threshold, 3, seed):
            assert edge_sets(H) <= edge_sets(host)
            assert not has_isolated(H)
            assert min_positive_degree(H, r - 1) > threshold * H.n
            assert is_proper(H, coloring)

    def test_dense_host_keeps_codegree_two(self):
        (H,) = sample_kpartite_above(3, 3, (2, 2, 2), Fraction(1, 5), 1, 1)
        assert min_positive_degree(H, 2) >= 2

    def test_single_edge_cannot_shrink(self):
        (H,) = sample_kpartite_above(3, 3, (1, 1, 1), Fraction(1, 5), 1, 0)
        assert H.edges == ((1, 2, 3),)

    def test_vertex_degree_variant(self):
        for H in sample_kpartite_above(3, 3, (3, 3, 3), Fraction(1, 18), 10, 4, i=1):
            assert min_positive_degree(H, 1) > Fraction(H.n**2, 18)

    def test_infeasible_host_yields_nothing(self, caplog):
        assert not kpartite_feasible(3, (1, 1, 5), Fraction(1, 5))
        assert list(sample_kpartite_above(3, 3, (1, 1, 5), Fraction(1, 5), 10, 0)) == []
        assert "fails" in caplog.text

    def test_wrong_part_count(self):
        with pytest.raises(ValueError):
            list(sample_kpartite_above(3, 3, (2, 2), Fraction(1, 5), 1, 0))

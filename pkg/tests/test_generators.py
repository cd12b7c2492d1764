import pytest
from hypothesis import given, settings, strategies as st

import oracles
from dicycles.digraph import girth, min_outdegree
from dicycles.generators import (
    ConstructionParams,
    bipartite_tournament_sets,
    even_params,
    gen_bipartite_tournament,
    gen_circular,
    gen_complete_symmetric,
    gen_directed_cycle,
    gen_even_girth,
    gen_odd_girth,
    gen_random_min_outdegree,
    layer_sets,
    odd_params,
    pad_sources,
)
from dicycles.packing import max_disjoint_cycles


class TestParams:
    def test_even(self):
        p = even_params(4, 3)
        assert (p.h, p.n) == (4, 5)
        assert even_params(4, 5, 1).h == 8 and even_params(4, 5, 1).n == 9

    def test_odd(self):
        p = odd_params(3, 2)
        assert (p.r, p.h, p.n) == (1, 3, 4)
        p = odd_params(3, 8)
        assert (p.h, p.n) == (12, 13)

    def test_n_exceeds_h(self):
        for g in (4, 6, 8):
            for k in range(1, 12):
                p = even_params(g, k)
                assert p.n > p.h

    @pytest.mark.parametrize("g,k", [(3, 0), (2, 1)])
    def test_rejects(self, g, k):
        with pytest.raises(ValueError):
            ConstructionParams(g, k)

    def test_family_parity(self):
        with pytest.raises(ValueError):
            even_params(5, 1)
        with pytest.raises(ValueError):
            odd_params(4, 1)
        with pytest.raises(ValueError):
            gen_even_girth(3, 2)
        with pytest.raises(ValueError):
            gen_odd_girth(4, 2)


class TestEvenGirth:
    def test_counts(self):
        D = gen_even_girth(4, 3)
        assert D.vertex_count == 25
        assert D.arc_count == 100 == 5 * 4 * 5

    def test_witness_shapes(self):
        D = gen_even_girth(4, 3)
        # smallest-witness convention, plus the layered cycle x0 y0 x4 y4
        assert girth(D).witness == (0, 5, 1, 9)
        assert D.is_cycle((0, 5, 4, 5 + 4 * 4))

    def test_shifted(self):
        D = gen_even_girth(4, 5, 1)
        assert min_outdegree(D) == 8
        assert D.vertex_count == 9 * 9

    @given(st.sampled_from([4, 6, 8]), st.integers(1, 5), st.integers(0, 2))
    @settings(max_examples=25, deadline=None)
    def test_invariants(self, g, k, c):
        p = even_params(g, k, c)
        D = gen_even_girth(g, k, c)
        X, Y = layer_sets(p)
        assert D.vertex_count == p.n * (p.h + 1)
        assert all((u in X) != (v in X) for u, v in D.arcs)
        assert {D.out_degree(v) for v in D.vertices()} == {p.h}
        assert D.arc_count == p.n * p.h * (p.h + 1)
        assert girth(D).girth == g


class TestOddGirth:
    def test_small(self):
        D1 = gen_odd_girth(3, 2, "with_chord")
        D2 = gen_odd_girth(3, 2, "without_chord")
        assert D1.vertex_count == 16
        assert girth(D1).girth == 3 and girth(D2).girth == 4
        assert set(D1.arcs) - set(D2.arcs) == {(3, 0)}
        degrees = {v: D1.out_degree(v) for v in D1.vertices()}
        assert degrees.pop(3) == 4
        assert set(degrees.values()) == {3}

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            gen_odd_girth(3, 2, "chordal")

    @given(st.sampled_from([3, 5, 7]), st.integers(1, 4))
    @settings(max_examples=20, deadline=None)
    def test_invariants(self, g, k):
        D1 = gen_odd_girth(g, k, "with_chord")
        D2 = gen_odd_girth(g, k, "without_chord")
        assert girth(D1).girth == g
        assert girth(D2).girth == g + 1
        assert len(set(D1.arcs) ^ set(D2.arcs)) == 1


class TestBipartiteTournament:
    def test_h2(self):
        D = gen_bipartite_tournament(2)
        X, Y = bipartite_tournament_sets(2)
        assert (len(X), len(Y)) == (6, 3)
        assert min_outdegree(D) == 2
        assert girth(D).girth == 4

    def test_h1_against_oracle(self):
        D = gen_bipartite_tournament(1)
        assert girth(D).girth == oracles.girth(D) == 4

    def test_h4_packing(self):
        D = gen_bipartite_tournament(4)
        assert max_disjoint_cycles(D).upper_bound <= 2

    @pytest.mark.parametrize("h", range(1, 6))
    def test_orientation_of_complete_bipartite(self, h):
        D = gen_bipartite_tournament(h)
        X, Y = bipartite_tournament_sets(h)
        for x in X:
            for y in Y:
                assert D.has_arc(x, y) != D.has_arc(y, x)
        assert D.arc_count == len(X) * len(Y)


class TestCircular:
    def test_small(self):
        D = gen_circular(2, 3)
        assert D.vertex_count == 5
        assert girth(D).girth == oracles.girth(D) == 3

    def test_cycle(self):
        assert gen_circular(1, 5) == gen_directed_cycle(5)

    def test_p4_g3_packing(self):
        # nine vertices hold three disjoint triangles
        D = gen_circular(4, 3)
        assert D.vertex_count == 9
        assert max_disjoint_cycles(D).lower_bound == oracles.max_packing(D) == 3
        assert all(D.is_cycle(c) for c in [(0, 1, 5), (2, 4, 7), (3, 6, 8)])

    @pytest.mark.parametrize("p", range(1, 6))
    @pytest.mark.parametrize("g", range(2, 8))
    def test_girth_sweep(self, p, g):
        D = gen_circular(p, g)
        assert min_outdegree(D) == p
        assert girth(D).girth == g


class TestComplete:
    def test_counts(self):
        D = gen_complete_symmetric(6)
        assert D.arc_count == 30 and min_outdegree(D) == 5

    def test_single(self):
        assert girth(gen_complete_symmetric(1)).acyclic

    def test_packing_five(self):
        assert max_disjoint_cycles(gen_complete_symmetric(5)).lower_bound == 2


class TestPadSources:
    def test_preserves_girth_and_packing(self):
        D = gen_even_girth(4, 3)
        P = pad_sources(D, 3, 4, seed=11)
        assert P.vertex_count == 28
        assert girth(P).girth == girth(D).girth == 4
        assert max_disjoint_cycles(P).lower_bound == max_disjoint_cycles(D).lower_bound == 2
        for v in range(25, 28):
            assert P.in_degree(v) == 0 and P.out_degree(v) == 4

    def test_digon(self):
        D = gen_directed_cycle(2)
        assert girth(pad_sources(D, 1, 1, seed=0)).girth == 2

    def test_rejects_large_degree(self):
        with pytest.raises(ValueError):
            pad_sources(gen_directed_cycle(3), 1, 4, seed=0)

    def test_deterministic(self):
        D = gen_even_girth(4, 2)
        assert pad_sources(D, 2, 3, 5) == pad_sources(D, 2, 3, 5)


class TestRandom:
    def test_min_outdegree(self):
        D = gen_random_min_outdegree(12, 5, 1)
        assert {D.out_degree(v) for v in D.vertices()} == {5}

    def test_deterministic(self):
        assert gen_random_min_outdegree(12, 5, 9).arcs == gen_random_min_outdegree(12, 5, 9).arcs

    def test_forced_complete(self):
        assert gen_random_min_outdegree(6, 5, 3) == gen_complete_symmetric(6)

    def test_rejects(self):
        with pytest.raises(ValueError):
            gen_random_min_outdegree(5, 5, 0)

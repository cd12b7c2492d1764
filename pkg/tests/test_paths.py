import pytest
from hypothesis import given, settings

import oracles
from conftest import digraphs, random_digraph
from dicycles.digraph import Digraph
from dicycles.generators import (
    gen_bipartite_tournament,
    gen_complete_symmetric,
    gen_directed_cycle,
    gen_directed_path,
    gen_even_girth,
)
from dicycles.paths import (
    bipartite_path_bound,
    bipartition,
    longest_path_exact,
    path_upper_bound,
)


class TestExamples:
    def test_complete_four(self):
        cert = longest_path_exact(gen_complete_symmetric(4))
        assert cert.length == 3 and cert.exact
        assert cert.witness == (0, 1, 2, 3)

    def test_cycle(self):
        cert = longest_path_exact(gen_directed_cycle(6))
        assert cert.length == 5 and cert.witness == (0, 1, 2, 3, 4, 5)

    def test_path(self):
        assert longest_path_exact(gen_directed_path(4)).length == 3

    def test_empty_and_single(self):
        assert longest_path_exact(Digraph(0, [])).length == 0
        cert = longest_path_exact(Digraph(1, []))
        assert cert.length == 0 and cert.witness == (0,) and cert.exact

    def test_even_family(self):
        cert = longest_path_exact(gen_even_girth(4, 2))
        assert cert.length == 8 and cert.exact
        D = gen_even_girth(4, 2)
        assert D.is_path(cert.witness) and len(cert.witness) == 9

    def test_even_family_k1(self):
        assert longest_path_exact(gen_even_girth(4, 1)).length == 6

    def test_dict(self):
        d = longest_path_exact(gen_directed_path(3)).as_dict()
        assert d == {"length": 2, "exact": True, "upper_bound": 2, "witness": [0, 1, 2]}


class TestBounds:
    def test_bipartition_odd(self):
        assert bipartition(gen_directed_cycle(3)) is None
        assert bipartite_path_bound(gen_directed_cycle(3)) is None

    def test_even_family_alternation(self):
        # 4 X-vertices against 12 Y-vertices: at most 9 vertices on a path
        assert bipartite_path_bound(gen_even_girth(4, 2)) == 8

    def test_tournament(self):
        D = gen_bipartite_tournament(2)
        assert bipartite_path_bound(D) == 6
        assert longest_path_exact(D).length <= 6

    def test_upper_bound_trivial(self):
        assert path_upper_bound(gen_complete_symmetric(5)) == 4

    @given(digraphs(max_n=9))
    @settings(max_examples=150, deadline=None)
    def test_bound_is_sound(self, D):
        assert oracles.longest_path(D) <= path_upper_bound(D)


class TestAgainstOracle:
    @given(digraphs(max_n=8))
    @settings(max_examples=150, deadline=None)
    def test_transpose_symmetry(self, D):
        assert longest_path_exact(D).length == longest_path_exact(D.transpose()).length

    def test_matches_brute_force(self, rng):
        for _ in range(100):
            n = rng.randint(1, 12)
            p = rng.choice([0.1, 0.2, 0.3]) if n > 9 else rng.choice([0.2, 0.4, 0.7])
            D = random_digraph(rng, n, p)
            cert = longest_path_exact(D)
            assert cert.exact
            assert cert.length == oracles.longest_path(D)
            assert D.is_path(cert.witness) and len(cert.witness) == cert.length + 1


class TestBudget:
    def test_inexact_when_exhausted(self):
        D = Digraph(8, [(u, v) for u in range(8) for v in range(8) if abs(u - v) in (1, 3)])
        cert = longest_path_exact(D, budget=3)
        assert not cert.exact
        assert cert.length <= cert.upper_bound
        assert cert.upper_bound == path_upper_bound(D)

    def test_stops_at_upper_bound(self):
        # a Hamiltonian path meets the trivial bound, so the search may stop early
        cert = longest_path_exact(gen_complete_symmetric(7), budget=6)
        assert cert.exact and cert.length == 6

    @pytest.mark.parametrize("budget", [1, 10, 100])
    def test_witness_valid_under_budget(self, budget):
        D = gen_even_girth(4, 2)
        cert = longest_path_exact(D, budget=budget)
        assert D.is_path(cert.witness)

import pytest
from hypothesis import given, settings

import oracles
from conftest import digraphs, random_digraph
from dicycles.digraph import (
    Digraph,
    DigraphBuilder,
    format_dot,
    format_edge_list,
    girth,
    is_strongly_connected,
    min_outdegree,
    parse_edge_list,
    read_edge_list,
    strong_connectivity,
    write_edge_list,
)
from dicycles.generators import (
    gen_complete_symmetric,
    gen_directed_cycle,
    gen_even_girth,
    gen_odd_girth,
)


class TestConstruction:
    def test_rejects_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Digraph(3, [(1, 1)])

    def test_rejects_parallel(self):
        with pytest.raises(ValueError, match="parallel"):
            Digraph(3, [(0, 1), (0, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Digraph(2, [(0, 2)])

    def test_digon_allowed(self):
        D = Digraph(2, [(0, 1), (1, 0)])
        assert D.arc_count == 2

    def test_builder(self):
        b = DigraphBuilder()
        b.add_vertices(3)
        b.add_arc(2, 0)
        b.add_arc(0, 1)
        with pytest.raises(ValueError):
            b.add_arc(0, 1)
        D = b.build()
        assert D.arcs == ((0, 1), (2, 0))
        assert D.out_lists == ((1,), (), (0,))
        assert D.in_lists == ((2,), (0,), ())

    @given(digraphs())
    def test_lists_are_transposes(self, D):
        from_out = sorted((u, v) for u in D.vertices() for v in D.out_lists[u])
        from_in = sorted((u, v) for v in D.vertices() for u in D.in_lists[v])
        assert from_out == from_in == list(D.arcs)

    def test_equality_and_hash(self):
        a = Digraph(3, [(0, 1), (1, 2)])
        b = Digraph(3, [(1, 2), (0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != Digraph(4, [(0, 1), (1, 2)])


class TestIO:
    def test_round_trip(self, tmp_path):
        D = gen_even_girth(4, 2)
        path = tmp_path / "g.txt"
        write_edge_list(D, path)
        assert read_edge_list(path) == D
        text = path.read_text()
        assert text.startswith("16 48\n") and text.endswith("\n")

    def test_sorted_output(self):
        D = Digraph(3, [(2, 0), (0, 2), (1, 0)])
        assert format_edge_list(D) == "3 3\n0 2\n1 0\n2 0\n"

    @pytest.mark.parametrize(
        "text",
        ["", "3\n", "2 1\n", "2 1\n0 1 5\n", "2 1\n0 0\n"],
    )
    def test_bad_input(self, text):
        with pytest.raises(ValueError):
            parse_edge_list(text)

    def test_dot(self):
        dot = format_dot(Digraph(2, [(0, 1)]))
        assert dot == "digraph D {\n  0;\n  1;\n  0 -> 1;\n}\n"


class TestMinOutdegree:
    def test_examples(self):
        assert min_outdegree(gen_complete_symmetric(6)) == 5
        assert min_outdegree(gen_directed_cycle(3)) == 1
        assert min_outdegree(gen_even_girth(4, 3)) == 4

    def test_empty(self):
        assert min_outdegree(Digraph(0, [])) == 0


class TestGirth:
    def test_digon(self):
        cert = girth(Digraph(3, [(0, 1), (1, 2), (2, 1)]))
        assert cert.girth == 2 and cert.witness == (1, 2)

    def test_acyclic(self):
        assert girth(Digraph(0, [])).acyclic
        cert = girth(Digraph(3, [(0, 1), (1, 2)]))
        assert cert.girth is None and cert.witness == ()
        assert cert.as_dict() == {"girth": "acyclic", "witness": []}

    def test_even_family(self):
        assert girth(gen_even_girth(6, 5)).girth == 6

    def test_odd_family_witness(self):
        # x'_0 -> first vertex of Y'_0 -> x'_3 -> x'_0
        assert girth(gen_odd_girth(3, 2)).witness == (0, 4, 3)

    def test_lexicographic_witness(self):
        # two triangles; the one through 0 wins
        D = Digraph(6, [(3, 4), (4, 5), (5, 3), (0, 2), (2, 1), (1, 0)])
        assert girth(D).witness == (0, 2, 1)

    @given(digraphs())
    @settings(max_examples=150)
    def test_transpose_symmetry(self, D):
        assert girth(D).girth == girth(D.transpose()).girth

    @given(digraphs())
    @settings(max_examples=150)
    def test_two_iff_digon(self, D):
        has_digon = any(D.has_arc(v, u) for u, v in D.arcs)
        assert (girth(D).girth == 2) == has_digon

    def test_matches_brute_force(self, rng):
        for _ in range(150):
            n = rng.randint(1, 7)
            D = random_digraph(rng, n, rng.choice([0.15, 0.3, 0.5]))
            cert = girth(D)
            assert cert.girth == oracles.girth(D)
            if cert.girth is not None:
                assert D.is_cycle(cert.witness) and len(cert.witness) == cert.girth
                assert cert.witness == min(
                    c for c in oracles.all_cycles(D) if len(c) == cert.girth
                )


class TestStrongConnectivity:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_complete(self, n):
        assert strong_connectivity(gen_complete_symmetric(n)) == n - 1

    def test_cycle(self):
        assert strong_connectivity(gen_directed_cycle(7)) == 1

    def test_disconnected(self):
        D = Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert not is_strongly_connected(D)
        assert strong_connectivity(D) == 0

    def test_too_small(self):
        with pytest.raises(ValueError):
            strong_connectivity(Digraph(1, []))

    def test_matches_networkx(self, rng):
        for _ in range(80):
            n = rng.randint(2, 8)
            D = random_digraph(rng, n, rng.choice([0.4, 0.6, 0.8]))
            assert strong_connectivity(D) == oracles.strong_connectivity(D)

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bellgraphs.graphs import (
    Graph,
    Graph6Error,
    canonical_code,
    chromatic_number,
    claw_closure,
    complement,
    complete_bipartite,
    complete_graph,
    count_triangles,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_graph6,
    generate_nonisomorphic_graphs,
    graph6_decode,
    graph6_encode,
    is_isomorphic,
    line_graph,
    normalize_ddagger,
    path_graph,
    star_graph,
    strip_universal,
    to_graph6,
    universal_vertices,
)


def perm_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Brute-force oracle for isomorphism, n <= 7."""
    if g1.n != g2.n:
        return False
    return any(g1.relabel(p).adj == g2.adj for p in itertools.permutations(range(g1.n))) or g1.n == 0


@st.composite
def small_graphs(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    bits = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << bits) - 1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> idx) & 1:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


class TestBasics:
    def test_validation_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0b00))

    def test_validation_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(1, (0b1,))

    def test_edges_roundtrip(self):
        g = cycle_graph(5)
        assert Graph.from_edges(5, g.edges()) == g
        assert g.edge_count() == 5
        assert g.degree(0) == 2


class TestComplement:
    def test_k3_to_empty(self):
        assert complement(complete_graph(3)) == empty_graph(3)

    def test_empty_to_complete(self):
        assert complement(empty_graph(4)) == complete_graph(4)

    def test_c5_self_complementary(self):
        assert is_isomorphic(complement(cycle_graph(5)), cycle_graph(5))

    @given(small_graphs())
    @settings(max_examples=60)
    def test_involution(self, g):
        assert complement(complement(g)) == g


class TestUniversalAndStrip:
    def test_universal_examples(self):
        assert universal_vertices(complete_graph(4)) == (0, 1, 2, 3)
        assert universal_vertices(star_graph(3)) == (0,)
        assert universal_vertices(cycle_graph(4)) == ()

    def test_strip_examples(self):
        assert strip_universal(complete_graph(4)) == empty_graph(0)
        assert strip_universal(star_graph(3)) == empty_graph(3)
        assert strip_universal(cycle_graph(5)) == cycle_graph(5)

    @given(small_graphs())
    @settings(max_examples=60)
    def test_strip_idempotent(self, g):
        s = strip_universal(g)
        assert strip_universal(s) == s


class TestClawClosure:
    def test_empty3(self):
        want = disjoint_union(complete_graph(3), complete_graph(1))
        assert is_isomorphic(claw_closure(empty_graph(3)), want)

    def test_c5_fixed(self):
        assert is_isomorphic(claw_closure(cycle_graph(5)), cycle_graph(5))

    def test_star(self):
        want = disjoint_union(complete_graph(3), complete_graph(1))
        assert is_isomorphic(claw_closure(star_graph(3)), want)

    def test_ddagger_example(self):
        g = disjoint_union(complete_graph(3), complete_graph(1))
        assert is_isomorphic(normalize_ddagger(g), star_graph(3))
        assert normalize_ddagger(complete_graph(1)) == empty_graph(0)

    @given(small_graphs())
    @settings(max_examples=40)
    def test_idempotent(self, g):
        c = claw_closure(g)
        assert is_isomorphic(claw_closure(c), c)


class TestChromatic:
    def test_examples(self):
        assert chromatic_number(complete_graph(4)) == 4
        assert chromatic_number(cycle_graph(6)) == 2
        assert chromatic_number(cycle_graph(5)) == 3
        assert chromatic_number(empty_graph(0)) == 0

    def test_cliques(self):
        for n in range(1, 8):
            assert chromatic_number(complete_graph(n)) == n

    @given(small_graphs())
    @settings(max_examples=40)
    def test_degree_bound(self, g):
        if g.n:
            assert chromatic_number(g) <= g.max_degree() + 1


class TestLineGraph:
    def test_claw_is_triangle(self):
        assert is_isomorphic(line_graph(star_graph(3)), complete_graph(3))

    def test_k1(self):
        assert line_graph(complete_graph(1)) == empty_graph(0)

    def test_p4(self):
        assert is_isomorphic(line_graph(path_graph(4)), path_graph(3))

    @given(small_graphs())
    @settings(max_examples=40)
    def test_sizes_and_degrees(self, g):
        lg = line_graph(g)
        assert lg.n == g.edge_count()
        for idx, (u, v) in enumerate(g.edges()):
            assert lg.degree(idx) == g.degree(u) + g.degree(v) - 2


class TestTriangles:
    def test_examples(self):
        assert count_triangles(complete_graph(3)) == 1
        assert count_triangles(cycle_graph(5)) == 0
        assert count_triangles(complete_graph(4)) == 4
        assert count_triangles(complete_bipartite(3, 3)) == 0


class TestIsomorphism:
    def test_degree_sequence_difference(self):
        assert not is_isomorphic(star_graph(3), disjoint_union(complete_graph(3), complete_graph(1)))

    def test_relabeling(self):
        g = path_graph(3)
        assert is_isomorphic(g, g.relabel((2, 0, 1)))

    def test_exhaustive_against_permutation_search(self):
        for n in range(0, 5):
            reps = list(generate_nonisomorphic_graphs(n))
            for i, g1 in enumerate(reps):
                for g2 in reps[i:]:
                    codes_equal = canonical_code(g1) == canonical_code(g2)
                    assert codes_equal == perm_isomorphic(g1, g2)

    @given(small_graphs(max_n=5), st.randoms(use_true_random=False))
    @settings(max_examples=50)
    def test_code_invariant_under_relabeling(self, g, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_code(g.relabel(perm)) == canonical_code(g)


class TestGeneration:
    def test_counts(self):
        assert [len(list(generate_nonisomorphic_graphs(n))) for n in range(7)] == [
            1, 1, 2, 4, 11, 34, 156,
        ]

    def test_cap(self):
        with pytest.raises(ValueError):
            list(generate_nonisomorphic_graphs(9))

    def test_pairwise_distinct(self):
        reps = list(generate_nonisomorphic_graphs(4))
        codes = {canonical_code(g) for g in reps}
        assert len(codes) == len(reps)


class TestGraph6:
    def test_spec_examples(self):
        assert from_graph6("B?") == empty_graph(3)
        assert from_graph6("Bw") == complete_graph(3)
        assert to_graph6(empty_graph(3)) == "B?"
        assert to_graph6(complete_graph(3)) == "Bw"

    def test_roundtrip_exhaustive(self):
        for g in generate_nonisomorphic_graphs(5):
            assert from_graph6(to_graph6(g)) == g

    def test_networkx_oracle(self):
        nx = pytest.importorskip("networkx")
        for g in generate_nonisomorphic_graphs(5):
            h = nx.from_graph6_bytes(to_graph6(g).encode())
            assert set(h.nodes) == set(range(g.n))
            assert {tuple(sorted(e)) for e in h.edges} == set(g.edges())
        for h in [nx.cycle_graph(7), nx.complete_graph(6), nx.path_graph(9)]:
            text = nx.to_graph6_bytes(h, header=False).decode().strip()
            g = from_graph6(text)
            assert {tuple(sorted(e)) for e in h.edges} == set(g.edges())

    def test_large_n_header(self):
        n, edges = graph6_decode(graph6_encode(100, lambda i, j: j == i + 1))
        assert n == 100
        assert edges == [(i, i + 1) for i in range(99)]

    def test_malformed(self):
        with pytest.raises(Graph6Error):
            graph6_decode("B")  # truncated payload
        with pytest.raises(Graph6Error):
            graph6_decode("Bww")  # overlong payload
        with pytest.raises(Graph6Error):
            graph6_decode("B\x1c")  # character below the alphabet

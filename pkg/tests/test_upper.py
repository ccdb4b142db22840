import pytest

from bellgraphs.bell import FULL, UnlabeledGraph, at_least, build_bell, scramble
from bellgraphs.graphs import (
    claw_closure,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    generate_nonisomorphic_graphs,
    is_isomorphic,
    path_graph,
    star_graph,
    strip_universal,
    to_graph6,
)
from bellgraphs.partitions import singleton_partition
from bellgraphs.upper import (
    REGIME_CLIQUE,
    REGIME_EMPTY,
    REGIME_K5_MINUS,
    REGIME_LOW,
    REGIME_N_MINUS_1,
    REGIME_SINGLE_VERTEX,
    EmptyInput,
    NoCandidate,
    k5_minus,
    phi,
    reconstruct_prime,
    reconstruct_prime_report,
    reconstruct_upper_auto,
)


class TestPhi:
    def test_at_least_2_of_empty3_gives_claw_closure(self):
        b = build_bell(empty_graph(3), at_least(2))
        u = b.as_unlabeled()
        p = b.index_of(singleton_partition(3))
        want = disjoint_union(complete_graph(3), complete_graph(1))
        assert is_isomorphic(phi(u, p), want)

    def test_full_of_empty3_gives_host(self):
        b = build_bell(empty_graph(3), FULL)
        u = b.as_unlabeled()
        p = b.index_of(singleton_partition(3))
        assert is_isomorphic(phi(u, p), empty_graph(3))

    def test_claw_neighbourhood_falls_back(self):
        # p is vertex 0, its neighbourhood induces a claw (not a line graph)
        u = UnlabeledGraph.from_edges(
            5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
        )
        assert phi(u, 0) == complete_graph(1)


class TestReconstructPrime:
    def test_spec_examples(self):
        cases = [
            (cycle_graph(4), FULL),
            (star_graph(3), FULL),
            (cycle_graph(5), at_least(2)),
        ]
        for host, variant in cases:
            b = build_bell(host, variant)
            for seed in (0, 1):
                got = reconstruct_prime(scramble(b, seed))
                assert is_isomorphic(got, strip_universal(host)), to_graph6(host)

    def test_small_inputs_via_lookup(self):
        one = UnlabeledGraph.from_edges(1, [])
        assert reconstruct_prime(one) == empty_graph(0)
        two = UnlabeledGraph.from_edges(2, [(0, 1)])
        assert reconstruct_prime(two) == empty_graph(2)

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            reconstruct_prime(UnlabeledGraph.from_edges(0, []))

    def test_bad_two_vertex_input(self):
        with pytest.raises(NoCandidate):
            reconstruct_prime(UnlabeledGraph.from_edges(2, []))

    def test_report_carries_candidates(self):
        b = build_bell(cycle_graph(4), FULL)
        report = reconstruct_prime_report(scramble(b, 0))
        assert report.regime == REGIME_LOW
        assert report.pivot in report.candidate_sets.omega5

    def test_seed_invariance(self):
        b = build_bell(cycle_graph(5), FULL)
        codes = set()
        from bellgraphs.graphs import canonical_code

        for seed in range(3):
            codes.add(canonical_code(reconstruct_prime(scramble(b, seed))))
        assert len(codes) == 1


class TestUpperAuto:
    def test_empty_regime(self):
        r = reconstruct_upper_auto(UnlabeledGraph.from_edges(0, []))
        assert r.regime == REGIME_EMPTY

    def test_single_vertex_regime(self):
        r = reconstruct_upper_auto(UnlabeledGraph.from_edges(1, []))
        assert r.regime == REGIME_SINGLE_VERTEX

    def test_clique_input_possibilities(self):
        r = reconstruct_upper_auto(UnlabeledGraph.from_edges(4, complete_graph(4).edges()))
        assert r.regime == REGIME_CLIQUE
        got = {(to_graph6(p.graph), p.k_condition) for p in r.possibilities}
        k3k1 = disjoint_union(complete_graph(3), complete_graph(1))
        assert got == {
            (to_graph6(k3k1), "k <= n-1"),
            (to_graph6(empty_graph(3)), "k = n-1"),
        }

    def test_k5_minus_input_possibilities(self):
        u = UnlabeledGraph.from_edges(5, k5_minus().edges())
        r = reconstruct_upper_auto(u)
        assert r.regime == REGIME_K5_MINUS
        assert {p.k_condition for p in r.possibilities} == {"k <= n-2", "k = n-1"}

    def test_c5_low_regime(self):
        b = build_bell(cycle_graph(5), at_least(2))
        r = reconstruct_upper_auto(scramble(b, 1))
        assert r.regime == REGIME_LOW
        assert is_isomorphic(r.result, cycle_graph(5))

    def test_c5_penultimate_regime(self):
        b = build_bell(cycle_graph(5), at_least(4))
        r = reconstruct_upper_auto(scramble(b, 1))
        assert r.regime == REGIME_N_MINUS_1
        assert is_isomorphic(r.result, claw_closure(cycle_graph(5)))

    def test_all_hosts_n4_all_k(self):
        for g in generate_nonisomorphic_graphs(4):
            for k in range(1, 6):
                b = build_bell(g, at_least(k))
                u = scramble(b, 0)
                r = reconstruct_upper_auto(u)
                if b.m == 0:
                    assert r.regime == REGIME_EMPTY
                elif b.m == 1:
                    assert r.regime == REGIME_SINGLE_VERTEX
                elif r.regime == REGIME_LOW:
                    assert k <= g.n - 2
                    assert is_isomorphic(r.result, strip_universal(g))
                elif r.regime == REGIME_N_MINUS_1:
                    assert k == g.n - 1
                    assert is_isomorphic(r.result, claw_closure(g))
                else:
                    assert r.regime in (REGIME_CLIQUE, REGIME_K5_MINUS)
                    ok = any(
                        is_isomorphic(p.graph, strip_universal(g))
                        for p in r.possibilities
                    )
                    assert ok, (to_graph6(g), k)

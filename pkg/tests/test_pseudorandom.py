import math
import random

import pytest

from dicycles.errors import (
    InvalidParameterError,
    SizeLimitError,
    UndefinedDensityError,
)
from dicycles.graph import Digraph, density, generate_random
from dicycles.pseudorandom import (
    expansion_parameter,
    is_bounded,
    p_density,
    regular_pair_check,
    sampled_r_at_size,
    witnessed_r,
)
from oracles import naive_edge_count, naive_regular_pair


def complete(n):
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def both_direction_bipartite(t, missing=()):
    edges = []
    for u in range(t):
        for v in range(t, 2 * t):
            if (u, v) not in missing:
                edges.append((u, v))
            if (v, u) not in missing:
                edges.append((v, u))
    return Digraph(2 * t, edges)


class TestWitnessedR:
    def test_empty_graph_zero(self):
        rep = witnessed_r(Digraph(5, []))
        assert rep.r_witnessed == 0.0
        assert rep.p == 0.0
        assert not rep.degenerate_density

    def test_complete_n4_matches_enumeration(self):
        # oracle: for the complete digraph every disjoint pair of size a has
        # e = a^2 = a^2 * 1, deviation |a^2 - p a^2| / (a sqrt(4p)), p = 3/4
        G = complete(4)
        p = 12 / 16
        expected = max(
            abs(a * a - p * a * a) / (a * math.sqrt(p * 4)) for a in (1, 2)
        )
        rep = witnessed_r(G)
        assert rep.r_witnessed == pytest.approx(expected)
        assert rep.mode == "exact"

    def test_sampled_below_exact(self):
        G = generate_random(10, 0.4, 3)
        exact = witnessed_r(G).r_witnessed
        sampled = witnessed_r(G, mode="sampled", trials=200, seed=1).r_witnessed
        assert sampled <= exact + 1e-12

    def test_sampled_below_exact_many_graphs(self):
        rng = random.Random(17)
        for _ in range(50):
            n = rng.randint(4, 10)
            G = generate_random(n, rng.random(), rng.randrange(10**6))
            exact = witnessed_r(G).r_witnessed
            for trials in (10, 100):
                sampled = witnessed_r(
                    G, mode="sampled", trials=trials, seed=rng.randrange(10**6)
                ).r_witnessed
                assert sampled <= exact + 1e-12

    def test_exact_size_limit(self):
        with pytest.raises(SizeLimitError):
            witnessed_r(generate_random(13, 0.5, 0))

    def test_monotone_under_edge_addition_fixed_p(self):
        rng = random.Random(23)
        checked = 0
        while checked < 25:
            n = rng.randint(3, 7)
            G = generate_random(n, rng.random() * 0.8, rng.randrange(10**6))
            missing = [
                (u, v)
                for u in range(n)
                for v in range(n)
                if u != v and (u, v) not in G.edges
            ]
            if not missing:
                continue
            p = 0.3
            before = witnessed_r(G, p=p).r_witnessed
            G2 = Digraph(n, set(G.edges) | {rng.choice(missing)})
            after = witnessed_r(G2, p=p).r_witnessed
            assert after >= before - 1e-12
            checked += 1

    def test_worst_pair_reported(self):
        rep = witnessed_r(complete(4))
        A, B, dev = rep.worst_pair
        assert dev == rep.r_witnessed
        assert not A & B and len(A) == len(B)

    def test_degenerate_density_flagged(self):
        rep = witnessed_r(Digraph(4, [(0, 1)]), p=0.0)
        assert rep.degenerate_density
        assert rep.r_witnessed == 1.0  # raw edge count convention


class TestDeviationScale:
    def test_random_digraphs_have_small_constant(self):
        # loose constant-c check at n = 600, p = 0.05, pairs of size n/4
        for seed in range(10):
            G = generate_random(600, 0.05, seed)
            r = sampled_r_at_size(G, 150, trials=10_000, seed=seed + 1000)
            assert r < 3.0


class TestIsBounded:
    def test_empty_bounded(self):
        assert is_bounded(Digraph(6, []), 1 / 3, 1.0, 0.5).bounded

    def test_complete_violated(self):
        # hand count: U, W of size 2 carry e = 4 > 1 * 0.5 * 4 = 2
        rep = is_bounded(complete(6), 1 / 3, 1.0, 0.5)
        assert not rep.bounded
        U, W, e, bound = rep.worst_pair
        assert e > bound

    def test_complete_bounded_with_slack(self):
        # every qualifying pair (sizes 2..4): e = |U||W| <= 3 * 0.9 * |U||W|
        assert is_bounded(complete(6), 1 / 3, 3.0, 0.9).bounded

    def test_sampled_refutes(self):
        rep = is_bounded(complete(6), 1 / 3, 1.0, 0.5, mode="sampled", trials=300, seed=2)
        assert not rep.bounded

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameterError):
            is_bounded(complete(4), 0.0, 1.0, 0.5)
        with pytest.raises(InvalidParameterError):
            is_bounded(complete(4), 0.5, -1.0, 0.5)


class TestPDensity:
    def test_complete_p1(self):
        assert p_density(complete(5), {0, 1}, {2, 3}, 1.0) == 1.0

    def test_arithmetic(self):
        G = Digraph(4, [(0, 2), (1, 3)])
        assert p_density(G, {0, 1}, {2, 3}, 0.5) == 1.0

    def test_empty_graph_zero(self):
        assert p_density(Digraph(6, []), {0, 1, 2}, {3, 4, 5}, 0.3) == 0.0

    def test_p_zero_rejected(self):
        with pytest.raises(UndefinedDensityError):
            p_density(complete(4), {0}, {1}, 0.0)


class TestRegularPairCheck:
    def test_complete_bipartite_regular(self):
        G = both_direction_bipartite(3)
        chk = regular_pair_check(G, range(3), range(3, 6), 0.3, 1.0)
        assert chk.regular
        assert chk.d_p_uw == 1.0 and chk.d_p_wu == 1.0

    def test_single_edge_irregular(self):
        G = Digraph(4, [(0, 2)])
        chk = regular_pair_check(G, [0, 1], [2, 3], 0.5, 1.0)
        assert not chk.regular
        Up, Wp, direction, dev = chk.worst_subpair
        assert dev == pytest.approx(0.75)
        assert direction == "U->W"

    def test_sampled_agrees_on_regular_instance(self):
        G = both_direction_bipartite(4)
        chk = regular_pair_check(
            G, range(4), range(4, 8), 0.3, 1.0, mode="sampled", trials=300, seed=5
        )
        assert chk.regular

    def test_matches_independent_enumeration(self):
        rng = random.Random(31)
        for _ in range(25):
            t = rng.randint(2, 6)
            G = generate_random(2 * t, rng.uniform(0.2, 0.9), rng.randrange(10**6))
            U, W = list(range(t)), list(range(t, 2 * t))
            delta = rng.choice([0.3, 0.5, 0.7])
            p = rng.choice([0.5, 0.8, 1.0])
            chk = regular_pair_check(G, U, W, delta, p)
            assert chk.regular == naive_regular_pair(G, U, W, delta, p)

    def test_reports_edge_densities(self):
        G = Digraph(4, [(0, 2), (0, 3), (2, 0)])
        chk = regular_pair_check(G, [0, 1], [2, 3], 0.5, 0.5)
        assert chk.edge_density_uw == pytest.approx(0.5)
        assert chk.edge_density_wu == pytest.approx(0.25)


class TestExpansionParameter:
    def test_complete_bipartite_k1(self):
        G = both_direction_bipartite(4)
        assert expansion_parameter(G, range(4), range(4, 8)).k == 1

    def test_isolated_vertex_forces_k2(self):
        missing = {(0, v) for v in range(4, 8)} | {(v, 0) for v in range(4, 8)}
        G = both_direction_bipartite(4, missing=missing)
        cert = expansion_parameter(G, range(4), range(4, 8))
        assert cert.k == 2
        A, B = cert.violating_pair
        assert len(A) == len(B) == 1

    def test_edgeless_reports_t_plus_one(self):
        G = Digraph(6, [])
        assert expansion_parameter(G, range(3), range(3, 6)).k == 4

    def test_exact_minimality_both_sides(self):
        # k is valid and k-1 is not: recheck both claims by direct enumeration
        from itertools import combinations

        rng = random.Random(41)
        for _ in range(10):
            t = rng.randint(3, 6)
            G = generate_random(2 * t, 0.55, rng.randrange(10**6))
            V1, V2 = list(range(t)), list(range(t, 2 * t))
            cert = expansion_parameter(G, V1, V2)
            k = cert.k

            def violates(A, B):
                fwd = any((u, v) in G.edges for u in A for v in B)
                bwd = any((v, u) in G.edges for u in A for v in B)
                return not (fwd and bwd)

            if k <= t:
                assert not any(
                    violates(A, B)
                    for A in combinations(V1, k)
                    for B in combinations(V2, k)
                )
            if k >= 2 and k - 1 <= t:
                assert any(
                    violates(A, B)
                    for A in combinations(V1, k - 1)
                    for B in combinations(V2, k - 1)
                )

    def test_sampled_lower_bound(self):
        missing = {(0, v) for v in range(4, 8)} | {(v, 0) for v in range(4, 8)}
        G = both_direction_bipartite(4, missing=missing)
        exact = expansion_parameter(G, range(4), range(4, 8)).k
        sampled = expansion_parameter(
            G, range(4), range(4, 8), mode="sampled", trials=500, seed=3
        ).k
        assert sampled <= exact

    def test_unequal_sides_rejected(self):
        with pytest.raises(InvalidParameterError):
            expansion_parameter(complete(5), range(2), range(2, 5))


def test_measured_density_is_default_reference():
    G = generate_random(8, 0.5, 9)
    rep = witnessed_r(G)
    assert rep.p == density(G)

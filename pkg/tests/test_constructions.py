import random

import pytest

from dicycles.constructions import (
    acyclic_split,
    expected_kept_fraction,
    layered_subgraph,
    random_delete,
    woodall_extremal,
)
from dicycles.errors import DomainError, InvalidParameterError
from dicycles.finders import exact_longest_cycle
from dicycles.graph import Digraph, generate_random, scc_decomposition
from oracles import has_topological_order


def complete(n):
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


class TestAcyclicSplit:
    def test_two_cycle_identity(self):
        G = Digraph(2, [(0, 1), (1, 0)])
        g1, g2 = acyclic_split(G, [0, 1])
        assert g1.edges == frozenset({(1, 0)})
        assert g2.edges == frozenset({(0, 1)})

    def test_forward_dag_unsplit(self):
        G = Digraph(4, [(0, 1), (1, 2), (2, 3)])
        g1, g2 = acyclic_split(G, [0, 1, 2, 3])
        assert g1.m == 0 and g2 == G

    def test_halves_acyclic_and_partition(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(2, 60)
            G = generate_random(n, rng.uniform(0.05, 0.6), rng.randrange(10**6))
            sigma = list(range(n))
            rng.shuffle(sigma)
            g1, g2 = acyclic_split(G, sigma)
            assert g1.edges | g2.edges == G.edges
            assert not (g1.edges & g2.edges)
            assert has_topological_order(g1) and has_topological_order(g2)
            assert max(g1.m, g2.m) >= G.m / 2

    def test_scc_singletons(self):
        G = generate_random(50, 0.3, 4)
        for half in acyclic_split(G, list(range(50))):
            assert all(len(c) == 1 for c in scc_decomposition(half))

    def test_non_bijective_rejected(self):
        with pytest.raises(InvalidParameterError):
            acyclic_split(complete(3), [0, 0, 1])


class TestLayeredSubgraph:
    def test_alpha_zero_keeps_everything(self):
        G = generate_random(9, 0.5, 2)
        gp, part = layered_subgraph(G, 0.0)
        assert gp == G
        assert len(part.classes) == 1

    def test_complete_n4_half(self):
        gp, part = layered_subgraph(complete(4), 0.5)
        assert [sorted(c) for c in part.classes] == [[0, 1], [2, 3]]
        assert gp.m == 8  # 4 within + 4 forward of the 12

    def test_edge_direction_invariant_exhaustive(self):
        rng = random.Random(13)
        for _ in range(20):
            n = rng.randint(4, 30)
            alpha = rng.choice([0.2, 0.4, 0.5, 0.6, 0.75])
            G = generate_random(n, 0.4, rng.randrange(10**6))
            if (1 - alpha) * n < 1:
                continue
            gp, part = layered_subgraph(G, alpha)
            idx = part.class_index()
            for u, v in G.edges:
                if (u, v) in gp.edges:
                    assert idx[u] <= idx[v]
                else:
                    assert idx[u] > idx[v]

    def test_partition_valid_and_sizes(self):
        G = generate_random(23, 0.3, 5)
        gp, part = layered_subgraph(G, 0.6)
        part.validate(23)
        sizes = [len(c) for c in part.classes]
        assert sizes[0] == 9  # floor(0.4 * 23)
        assert all(s == sizes[0] for s in sizes[:-1])

    def test_shuffled_assignment_same_sizes(self):
        G = generate_random(20, 0.4, 6)
        _, p1 = layered_subgraph(G, 0.5)
        _, p2 = layered_subgraph(G, 0.5, seed=9)
        assert sorted(len(c) for c in p1.classes) == sorted(
            len(c) for c in p2.classes
        )
        assert p1.classes != p2.classes

    def test_kept_fraction_matches_prediction(self):
        # predicted kept fraction 1 - (1-w)(alpha+w)/2 = 3/4 at alpha = 1/2
        assert expected_kept_fraction(0.5) == pytest.approx(0.75)
        fractions = []
        for seed in range(3):
            G = generate_random(400, 0.05, seed)
            gp, part = layered_subgraph(G, 0.5)
            fractions.append(gp.m / G.m)
            assert part.max_class_size <= 200
        mean = sum(fractions) / len(fractions)
        assert abs(mean - 0.75) < 0.02

    def test_cycle_confined_to_classes(self):
        G = generate_random(10, 0.8, 8)
        gp, part = layered_subgraph(G, 0.5)
        length, _ = exact_longest_cycle(gp)
        assert length <= part.max_class_size

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            layered_subgraph(complete(4), 1.0)
        with pytest.raises(DomainError):
            layered_subgraph(complete(4), 0.9)  # class size floor(0.1*4) = 0


class TestWoodallExtremal:
    def test_n6_ell4(self):
        G = woodall_extremal(6, 4)
        assert G.m // 2 == 7
        assert exact_longest_cycle(G, undirected=True)[0] == 3

    def test_n5_ell3_star(self):
        G = woodall_extremal(5, 3)
        assert G.m // 2 == 4
        assert exact_longest_cycle(G, undirected=True)[0] == 0

    def test_n7_ell7(self):
        G = woodall_extremal(7, 7)
        assert G.m // 2 == 16
        assert exact_longest_cycle(G, undirected=True)[0] == 6

    def test_symmetric_encoding(self):
        G = woodall_extremal(9, 5)
        assert all((v, u) in G.edges for (u, v) in G.edges)

    def test_circumference_below_ell(self):
        for n in range(4, 11):
            for ell in range(3, n + 1):
                G = woodall_extremal(n, ell)
                assert exact_longest_cycle(G, undirected=True)[0] <= ell - 1


class TestRandomDelete:
    def test_keep_all(self):
        G = generate_random(12, 0.5, 3)
        assert random_delete(G, 1.0, 0) == G

    def test_keep_none(self):
        G = generate_random(12, 0.5, 3)
        assert random_delete(G, 0.0, 0).m == 0

    def test_exact_cardinality(self):
        G = generate_random(20, 0.4, 1)
        kept = random_delete(G, 0.5, 7)
        assert kept.m == G.m // 2
        assert kept.edges <= G.edges

    def test_deterministic(self):
        G = generate_random(20, 0.4, 1)
        assert random_delete(G, 0.3, 5) == random_delete(G, 0.3, 5)

    def test_out_of_range(self):
        with pytest.raises(InvalidParameterError):
            random_delete(complete(4), 1.2, 0)

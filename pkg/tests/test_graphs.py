import math
import random

import pytest

from paracc.graphs import (
    BipartiteGraph,
    CCInstance,
    Clustering,
    Hypergraph,
    WeightedGraph,
    build_cc_bicluster_deletion,
    build_cc_from_expansion,
    build_cc_from_pbcc,
    cc_objective,
)
from paracc.objectives import pbcc_objective


def random_bipartite(rng, n1, n2, p=0.5):
    edges = [(i, j) for i in range(n1) for j in range(n2) if rng.random() < p]
    return BipartiteGraph(n1, n2, edges)


class TestHypergraph:
    def test_degrees_recomputable(self):
        h = Hypergraph(4, [[0, 1, 2], [1, 2], [3]])
        assert h.degrees == (1, 2, 2, 1)
        assert h.volume() == 6
        assert h.volume([1, 2]) == 4

    def test_out_of_range_node_rejected(self):
        with pytest.raises(ValueError):
            Hypergraph(3, [[0, 3]])

    def test_nonpositive_weight_rejected(self):
        with pytest.raises(ValueError):
            Hypergraph(3, [[0, 1]], edge_weights=[0.0])

    def test_duplicate_hyperedges_kept(self):
        h = Hypergraph(3, [[0, 1], [0, 1]])
        assert h.m == 2
        assert h.degrees == (2, 2, 0)

    def test_weight_modes(self):
        h = Hypergraph(3, [[0, 1], [0, 2]])
        assert h.with_node_weights("unit").node_weights == (1.0, 1.0, 1.0)
        assert h.with_node_weights("degree").node_weights == (2.0, 1.0, 1.0)


class TestWeightedGraph:
    def test_parallel_edges_merged(self):
        g = WeightedGraph(3, [(0, 1, 1.0), (1, 0, 0.5)])
        assert g.edge_weights == {(0, 1): 1.5}

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            WeightedGraph(2, [(1, 1, 1.0)])

    def test_cut_and_degrees(self):
        g = WeightedGraph(3, [(0, 1, 2.0), (1, 2, 1.0)])
        assert g.weighted_degree(1) == 3.0
        assert g.cut_weight({0}) == 2.0
        assert g.cut_weight({0, 2}) == 3.0


class TestClustering:
    def test_canonical_ids(self):
        c = Clustering([5, 5, 2, 7, 2])
        assert c.assignment == (0, 0, 1, 2, 1)
        assert c.k == 3

    def test_from_sets_and_clusters(self):
        c = Clustering.from_sets(4, [[0, 2], [1, 3]])
        assert c.clusters() == [[0, 2], [1, 3]]
        with pytest.raises(ValueError):
            Clustering.from_sets(3, [[0, 1], [1, 2]])

    def test_restrict(self):
        c = Clustering([0, 1, 1, 2])
        assert c.restrict([1, 2, 3]).assignment == (0, 0, 1)


class TestBuildPbcc:
    def test_single_edge_weights(self):
        g = BipartiteGraph(2, 2, [(0, 0)])
        inst = build_cc_from_pbcc(g, 0.0, 0.0, 0.5)
        assert inst.pos_weight(0, 2) == 0.5
        assert inst.neg_weight(0, 3) == 0.5
        assert inst.neg_weight(1, 2) == 0.5
        assert inst.neg_weight(0, 1) == 0.0  # same side, mu1 = 0
        assert inst.neg_weight(2, 3) == 0.0

    def test_lambda_cc_equivalence(self):
        # mu1 = mu2 = beta = lam is the resolution-graph construction on a
        # bipartite graph with unit node weights.
        lam = 0.3
        g = BipartiteGraph(2, 2, [(0, 0), (1, 1)])
        inst = build_cc_from_pbcc(g, lam, lam, lam)
        for i in range(4):
            for j in range(i + 1, 4):
                cross = (i < 2) != (j < 2)
                is_edge = cross and (i, j - 2) in g.edges
                if is_edge:
                    assert inst.pos_weight(i, j) == pytest.approx(1 - lam)
                    assert inst.neg_weight(i, j) == 0.0
                else:
                    assert inst.pos_weight(i, j) == 0.0
                    assert inst.neg_weight(i, j) == pytest.approx(lam)

    def test_beta_one_degenerate(self):
        g = BipartiteGraph(2, 2, [(0, 0), (1, 1)])
        inst = build_cc_from_pbcc(g, 0.0, 0.0, 1.0)
        assert inst.total_positive() == 0.0
        singles = Clustering(range(4))
        assert cc_objective(inst, singles) == 0.0

    def test_parameter_range_enforced(self):
        g = BipartiteGraph(1, 1, [])
        with pytest.raises(ValueError):
            build_cc_from_pbcc(g, -0.1, 0.0, 0.5)
        with pytest.raises(ValueError):
            build_cc_from_pbcc(g, 0.0, 0.0, 1.5)


class TestBuildExpansion:
    def test_star_aux_negative_vanishes(self):
        # one 3-edge star-expanded by hand: nodes 0..2 original, 3 auxiliary
        g = WeightedGraph(
            4,
            [(0, 3, 1.0), (1, 3, 1.0), (2, 3, 1.0)],
            node_weights=[1.0, 1.0, 1.0, 0.0],
        )
        inst = build_cc_from_expansion(g, 0.1, "degree")
        assert inst.neg_weight(0, 1) == pytest.approx(0.1)
        assert inst.neg_weight(0, 3) == 0.0

    def test_degree_mode_formula(self):
        g = WeightedGraph(2, [(0, 1, 1.0)], node_weights=[2.0, 3.0])
        inst = build_cc_from_expansion(g, 0.1, "degree")
        assert inst.neg_weight(0, 1) == pytest.approx(0.6)

    def test_lambda_zero_single_cluster_optimal(self):
        g = WeightedGraph(3, [(0, 1, 1.0), (1, 2, 2.0)])
        inst = build_cc_from_expansion(g, 0.0, "unit")
        assert cc_objective(inst, Clustering([0, 0, 0])) == 0.0
        assert cc_objective(inst, Clustering([0, 1, 2])) == 3.0

    def test_unit_mode_binarizes(self):
        g = WeightedGraph(2, [(0, 1, 1.0)], node_weights=[5.0, 0.0])
        inst = build_cc_from_expansion(g, 1.0, "unit")
        assert inst.node_weights == (1.0, 0.0)


class TestCCObjective:
    def test_extremes(self):
        rng = random.Random(0)
        for _ in range(20):
            n = rng.randint(2, 7)
            pos = {}
            neg = {}
            for i in range(n):
                for j in range(i + 1, n):
                    if rng.random() < 0.5:
                        pos[(i, j)] = rng.random()
                    else:
                        neg[(i, j)] = rng.random()
            inst = CCInstance(n, pos, explicit_negative=neg)
            assert cc_objective(inst, Clustering(range(n))) == pytest.approx(
                inst.total_positive(), abs=1e-12)
            assert cc_objective(inst, Clustering([0] * n)) == pytest.approx(
                inst.total_negative(), abs=1e-12)

    def test_relabel_invariance(self):
        inst = CCInstance(4, {(0, 1): 1.0, (2, 3): 2.0}, lam=0.25)
        c1 = Clustering([0, 0, 1, 1])
        c2 = Clustering([7, 7, 3, 3])
        assert cc_objective(inst, c1) == cc_objective(inst, c2)

    def test_pbcc_path_example(self):
        g = BipartiteGraph(2, 1, [(0, 0), (1, 0)])
        inst = build_cc_from_pbcc(g, 0.0, 0.0, 0.5)
        c = Clustering([0, 1, 0])  # {a1, b1}, {a2}
        assert cc_objective(inst, c) == pytest.approx(0.5)

    def test_matches_pbcc_objective_randomized(self):
        rng = random.Random(42)
        for _ in range(40):
            n1, n2 = rng.randint(1, 6), rng.randint(1, 6)
            g = random_bipartite(rng, n1, n2)
            mu1, mu2, beta = rng.random(), rng.random(), rng.random()
            inst = build_cc_from_pbcc(g, mu1, mu2, beta)
            for _ in range(5):
                c = Clustering([rng.randint(0, 3) for _ in range(n1 + n2)])
                assert cc_objective(inst, c) == pytest.approx(
                    pbcc_objective(g, c, mu1, mu2, beta), abs=1e-12)

    def test_fixed_pair_together_is_infinite(self):
        g = BipartiteGraph(2, 1, [(0, 0)])
        inst = build_cc_bicluster_deletion(g)
        assert math.isinf(cc_objective(inst, Clustering([0, 0, 0])))
        assert cc_objective(inst, Clustering([0, 1, 0])) == 0.0
        assert cc_objective(inst, Clustering([0, 1, 2])) == 1.0

    def test_signed_view_exclusive_for_pbcc(self):
        rng = random.Random(3)
        g = random_bipartite(rng, 4, 4)
        inst = build_cc_from_pbcc(g, 0.4, 0.6, 0.7)
        for i, j, wp, wn in inst.pairs_with_weights():
            assert wp == 0.0 or wn == 0.0

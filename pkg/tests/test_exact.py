import math
import random

import pytest

from paracc.exact import (
    Matching,
    brute_force_bipartition,
    brute_force_optimum,
    hopcroft_karp,
    matching_clustering,
)
from paracc.graphs import (
    BipartiteGraph,
    CCInstance,
    Clustering,
    Hypergraph,
    SizeLimitError,
    build_cc_from_pbcc,
    cc_objective,
)
from paracc.objectives import hyper_ncut, pbcc_objective, psi


def simple_max_matching(g: BipartiteGraph) -> int:
    """Independent oracle: single-augmenting-path matching (Kuhn's)."""
    match2 = [-1] * g.n2

    def try_augment(i, seen):
        for j in g.adj1[i]:
            if j in seen:
                continue
            seen.add(j)
            if match2[j] == -1 or try_augment(match2[j], seen):
                match2[j] = i
                return True
        return False

    size = 0
    for i in range(g.n1):
        if try_augment(i, set()):
            size += 1
    return size


def enumerate_partitions(n):
    def rec(v, used, rgs):
        if v == n:
            yield list(rgs)
            return
        for c in range(used + 1):
            rgs.append(c)
            yield from rec(v + 1, max(used, c + 1), rgs)
            rgs.pop()
    yield from rec(0, 0, [])


def random_instance(rng, n):
    pos, neg = {}, {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                pos[(i, j)] = rng.random()
            else:
                neg[(i, j)] = rng.random()
    return CCInstance(n, pos, explicit_negative=neg)


class TestBruteForce:
    def test_all_positive(self):
        inst = CCInstance(4, {(i, j): 1.0 for i in range(4) for j in range(i + 1, 4)},
                          explicit_negative={})
        c, v = brute_force_optimum(inst)
        assert v == 0.0 and c.k == 1

    def test_all_negative(self):
        inst = CCInstance(4, {}, explicit_negative={
            (i, j): 1.0 for i in range(4) for j in range(i + 1, 4)})
        c, v = brute_force_optimum(inst)
        assert v == 0.0 and c.k == 4

    def test_complete_biclique(self):
        g = BipartiteGraph(2, 2, [(i, j) for i in range(2) for j in range(2)])
        inst = build_cc_from_pbcc(g, 0.0, 0.0, 0.5)
        c, v = brute_force_optimum(inst)
        assert v == 0.0 and c.k == 1

    def test_matches_full_enumeration(self):
        rng = random.Random(11)
        for _ in range(15):
            n = rng.randint(2, 6)
            inst = random_instance(rng, n)
            _, fast = brute_force_optimum(inst)
            slow = min(cc_objective(inst, Clustering(rgs))
                       for rgs in enumerate_partitions(n))
            assert fast == pytest.approx(slow, abs=1e-12)

    def test_lexicographic_ties(self):
        # no weights at all: every partition costs 0; the all-zero growth
        # string is lexicographically smallest
        inst = CCInstance(4, {}, explicit_negative={})
        c, v = brute_force_optimum(inst)
        assert v == 0.0
        assert c.assignment == (0, 0, 0, 0)

    def test_incumbent_pruning_same_value(self):
        rng = random.Random(12)
        for _ in range(10):
            inst = random_instance(rng, 6)
            c0, v0 = brute_force_optimum(inst)
            hint = Clustering([0] * 6)
            _, v1 = brute_force_optimum(inst, incumbent=(hint, cc_objective(inst, hint)))
            assert v1 == pytest.approx(v0, abs=1e-12)

    def test_size_limit(self):
        inst = CCInstance(13, {}, explicit_negative={})
        with pytest.raises(SizeLimitError):
            brute_force_optimum(inst)

    def test_forbidden_pairs_respected(self):
        inst = CCInstance(3, {(0, 1): 1.0, (1, 2): 1.0}, explicit_negative={},
                          fixed_one=[(0, 2)])
        c, v = brute_force_optimum(inst)
        assert math.isfinite(v)
        assert c.separated(0, 2)


class TestBruteForceBipartition:
    def test_disjoint_groups(self):
        h = Hypergraph(4, [[0, 1], [2, 3]])
        s, v = brute_force_bipartition(h, "psi")
        assert v == 0.0
        assert s in (frozenset({0, 1}), frozenset({2, 3}))

    def test_single_edge_balanced(self):
        h = Hypergraph(6, [list(range(6))] * 2)
        s, v = brute_force_bipartition(h, "psi", "boundary")
        assert len(s) == 3  # every split cuts both edges; maximize volumes
        assert v == pytest.approx(2.0 / (6.0 * 6.0))

    def test_against_independent_evaluator(self):
        rng = random.Random(13)
        for _ in range(10):
            n = 8
            edges = [rng.sample(range(n), rng.randint(2, 4)) for _ in range(6)]
            h = Hypergraph(n, edges)
            total = h.volume()
            subsets = []
            for m in range(0, 1 << (n - 1)):
                s = frozenset({0} | {u for u in range(1, n) if m >> (u - 1) & 1})
                if len(s) < n and 0 < h.volume(s) < total:
                    subsets.append(s)
            for quotient, fn in (("psi", psi), ("hncut", hyper_ncut)):
                s, v = brute_force_bipartition(h, quotient, "linear")
                best = min(fn(h, t, "linear") for t in subsets)
                assert v == pytest.approx(best, abs=1e-12)
                assert v == pytest.approx(fn(h, s, "linear"), abs=1e-12)

    def test_size_limit(self):
        h = Hypergraph(21, [[0, 1]])
        with pytest.raises(SizeLimitError):
            brute_force_bipartition(h)


class TestHopcroftKarp:
    def test_examples(self):
        k33 = BipartiteGraph(3, 3, [(i, j) for i in range(3) for j in range(3)])
        assert len(hopcroft_karp(k33)) == 3
        star = BipartiteGraph(1, 4, [(0, j) for j in range(4)])
        assert len(hopcroft_karp(star)) == 1
        p4 = BipartiteGraph(2, 2, [(0, 0), (1, 0), (1, 1)])
        assert len(hopcroft_karp(p4)) == 2

    def test_against_single_augment(self):
        rng = random.Random(14)
        for _ in range(50):
            n1, n2 = rng.randint(1, 7), rng.randint(1, 7)
            edges = [(i, j) for i in range(n1) for j in range(n2)
                     if rng.random() < 0.4]
            g = BipartiteGraph(n1, n2, edges)
            assert len(hopcroft_karp(g)) == simple_max_matching(g)

    def test_deterministic(self):
        g = BipartiteGraph(3, 3, [(0, 0), (0, 1), (1, 0), (2, 2)])
        assert hopcroft_karp(g).pairs == hopcroft_karp(g).pairs

    def test_matching_validation(self):
        with pytest.raises(ValueError):
            Matching(((0, 0), (0, 1)))


class TestMatchingClustering:
    def test_empty_matching(self):
        g = BipartiteGraph(2, 2, [])
        c = matching_clustering(g, Matching(()))
        assert c.k == 4

    def test_perfect_matching(self):
        n = 4
        g = BipartiteGraph(n, n, [(i, j) for i in range(n) for j in range(n)])
        m = Matching(tuple((i, i) for i in range(n)))
        c = matching_clustering(g, m)
        assert c.k == n
        for i in range(n):
            assert not c.separated(i, n + i)

    def test_matching_regime_equals_brute_force(self):
        rng = random.Random(15)
        for _ in range(25):
            n1, n2 = rng.randint(1, 4), rng.randint(1, 4)
            edges = [(i, j) for i in range(n1) for j in range(n2)
                     if rng.random() < 0.5]
            g = BipartiteGraph(n1, n2, edges)
            beta = rng.uniform(0.0, 1.0)
            mu = rng.uniform(1.0 - beta, 1.0)
            inst = build_cc_from_pbcc(g, mu, mu, beta)
            cost_matching = pbcc_objective(
                g, matching_clustering(g, hopcroft_karp(g)), mu, mu, beta)
            _, cost_opt = brute_force_optimum(inst)
            assert cost_matching == pytest.approx(cost_opt, abs=1e-9)

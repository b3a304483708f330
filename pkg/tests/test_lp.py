import random

import numpy as np
import pytest

from paracc.exact import brute_force_optimum
from paracc.graphs import (
    BipartiteGraph,
    CCInstance,
    SizeLimitError,
    build_cc_bicluster_deletion,
    build_cc_from_pbcc,
)
from paracc.lp import build_lp, lp_lower_bound_check, solve_cc_lp, solve_metric_lp


def random_signed_instance(rng, n):
    pos, neg = {}, {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                pos[(i, j)] = rng.random()
            else:
                neg[(i, j)] = rng.random()
    return CCInstance(n, pos, explicit_negative=neg)


def max_violation(x):
    n = x.shape[0]
    worst = 0.0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) == 3:
                    worst = max(worst, x[i, j] - x[i, k] - x[j, k])
    return worst


class TestSolveMetricLP:
    def test_all_positive_is_zero(self):
        inst = CCInstance(4, {(i, j): 1.0 for i in range(4) for j in range(i + 1, 4)},
                          explicit_negative={})
        sol = solve_cc_lp(inst)
        assert sol.converged
        assert np.allclose(sol.x, 0.0)
        assert sol.objective_value == pytest.approx(0.0, abs=1e-9)

    def test_all_negative_is_one(self):
        inst = CCInstance(4, {}, explicit_negative={
            (i, j): 1.0 for i in range(4) for j in range(i + 1, 4)})
        sol = solve_cc_lp(inst)
        assert sol.converged
        off_diag = sol.x[~np.eye(4, dtype=bool)]
        assert np.allclose(off_diag, 1.0)
        assert sol.objective_value == pytest.approx(0.0, abs=1e-9)

    def test_bicluster_deletion_path(self):
        # path a1-b1-a2-b2: integer optimum deletes one edge
        g = BipartiteGraph(2, 2, [(0, 0), (1, 0), (1, 1)])
        inst = build_cc_bicluster_deletion(g)
        sol = solve_cc_lp(inst)
        assert sol.converged
        assert 0.5 - 1e-9 <= sol.objective_value <= 1.0 + 1e-9
        _, ilp = brute_force_optimum(inst)
        assert ilp == pytest.approx(1.0)
        assert lp_lower_bound_check(build_lp(inst), sol, ilp)

    def test_pinned_pairs_exactly_one(self):
        g = BipartiteGraph(3, 3, [(0, 0), (1, 1), (2, 2), (0, 1)])
        inst = build_cc_bicluster_deletion(g)
        sol = solve_cc_lp(inst)
        for (i, j) in inst.fixed_one:
            assert sol.x[i, j] == 1.0

    def test_lower_bound_below_ilp_randomized(self):
        rng = random.Random(20)
        for _ in range(15):
            n = rng.randint(3, 7)
            inst = random_signed_instance(rng, n)
            sol = solve_cc_lp(inst)
            assert sol.converged
            assert sol.feasibility_violation <= 1e-6
            assert max_violation(sol.x) <= 1e-6 + 1e-12
            _, ilp = brute_force_optimum(inst)
            assert lp_lower_bound_check(build_lp(inst), sol, ilp)
            # the integral solution is feasible for the LP
            assert sol.objective_value <= ilp + 1e-9

    def test_bound_history_nondecreasing(self):
        rng = random.Random(21)
        for _ in range(10):
            inst = random_signed_instance(rng, 6)
            sol = solve_cc_lp(inst)
            hist = sol.bound_history
            assert all(hist[t + 1] >= hist[t] - 1e-12 for t in range(len(hist) - 1))
            assert sol.lower_bound == hist[-1]

    def test_deterministic(self):
        rng = random.Random(22)
        inst = random_signed_instance(rng, 7)
        a = solve_cc_lp(inst)
        b = solve_cc_lp(inst)
        assert np.array_equal(a.x, b.x)
        assert a.bound_history == b.bound_history

    def test_unconverged_refuses_certificate(self):
        rng = random.Random(23)
        # an instance that needs triangle constraints, denied the rounds
        for _ in range(20):
            inst = random_signed_instance(rng, 7)
            sol = solve_cc_lp(inst, max_iters=1)
            if not sol.converged:
                with pytest.raises(ValueError):
                    lp_lower_bound_check(build_lp(inst), sol, 100.0)
                return
        pytest.skip("every random instance converged in one round")

    def test_dense_limit(self):
        inst = CCInstance(5, {}, explicit_negative={})
        with pytest.raises(SizeLimitError):
            build_lp(inst, dense_limit=4)

    def test_tolerance_validation(self):
        inst = CCInstance(3, {(0, 1): 1.0}, explicit_negative={})
        with pytest.raises(ValueError):
            solve_metric_lp(build_lp(inst), tol_feas=0.0)

    def test_single_node(self):
        inst = CCInstance(1, {}, explicit_negative={})
        sol = solve_cc_lp(inst)
        assert sol.converged and sol.objective_value == 0.0

    def test_pbcc_lp_within_bounds(self):
        rng = random.Random(24)
        for _ in range(10):
            n1, n2 = rng.randint(2, 4), rng.randint(2, 4)
            edges = [(i, j) for i in range(n1) for j in range(n2)
                     if rng.random() < 0.5]
            g = BipartiteGraph(n1, n2, edges)
            inst = build_cc_from_pbcc(g, 0.1, 0.1, 0.6)
            sol = solve_cc_lp(inst)
            assert sol.converged
            _, ilp = brute_force_optimum(inst)
            assert sol.lower_bound <= ilp + 1e-9

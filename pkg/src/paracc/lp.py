"""Metric-constrained LP relaxations of correlation clustering.

The relaxation minimizes sum w+_ij x_ij + w-_ij (1 - x_ij) over the metric
polytope (x_ij <= x_ik + x_jk for all triples, 0 <= x <= 1), with selected
pairs pinned to x = 1. Triangle constraints are generated lazily: each outer
round solves the current relaxation exactly (HiGHS via scipy), scans all
triples for violations, and adds the violated constraints. Every relaxation
value is a certified lower bound on the full LP optimum, hence on the
integer optimum, so the sequence of bounds is nondecreasing and the final
one is reported as ``lower_bound``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import csr_matrix

from .graphs import CCInstance, SizeLimitError

DEFAULT_DENSE_LIMIT = 300
DEFAULT_TOL_FEAS = 1e-6
DEFAULT_MAX_ITERS = 2000
# New constraints accepted per round, most violated first.
MAX_NEW_CONSTRAINTS = 20000


@dataclass(frozen=True)
class LPProblem:
    """Dense pairwise costs plus pinned pairs for one metric LP."""

    n: int
    pos: dict[tuple[int, int], float]
    neg: dict[tuple[int, int], float]
    fixed_one: frozenset[tuple[int, int]]
    constant: float  # sum of w- over free pairs + w+ over pinned pairs

    @property
    def num_pairs(self) -> int:
        return self.n * (self.n - 1) // 2


@dataclass
class FractionalSolution:
    """Approximate LP solution: symmetric distance matrix, worst triangle
    violation, objective value, and a certified lower bound (valid only
    when ``converged`` is True)."""

    x: np.ndarray
    feasibility_violation: float
    objective_value: float
    lower_bound: float
    converged: bool
    rounds: int = 0
    bound_history: tuple[float, ...] = field(default_factory=tuple)

    def distance(self, i: int, j: int) -> float:
        return float(self.x[i, j])


def build_lp(inst: CCInstance, dense_limit: int = DEFAULT_DENSE_LIMIT) -> LPProblem:
    """Materialize the dense pair costs of a CC instance. Pinned pairs keep
    their positive weight as a constant (x = 1) and drop out of the
    variable set; their infinite negative weight never enters."""
    if inst.n > dense_limit:
        raise SizeLimitError(f"LP limited to {dense_limit} nodes, got {inst.n}")
    pos: dict[tuple[int, int], float] = {}
    neg: dict[tuple[int, int], float] = {}
    const_terms = []
    for i, j, wp, wn in inst.pairs_with_weights():
        if (i, j) in inst.fixed_one:
            const_terms.append(wp)
            continue
        if wp:
            pos[(i, j)] = wp
        if wn:
            neg[(i, j)] = wn
            const_terms.append(wn)
    return LPProblem(
        n=inst.n,
        pos=pos,
        neg=neg,
        fixed_one=inst.fixed_one,
        constant=math.fsum(const_terms),
    )


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    idx = {}
    for i in range(n):
        for j in range(i + 1, n):
            idx[(i, j)] = len(idx)
    return idx


def _violations(x: np.ndarray, threshold: float) -> tuple[float, list[tuple[float, int, int, int]]]:
    """All triangle violations x_ij - x_ik - x_jk > threshold.

    Returns the worst violation and a list of (violation, i, j, k) with
    i < j the long side and k the witness node.
    """
    n = x.shape[0]
    worst = 0.0
    found: list[tuple[float, int, int, int]] = []
    for k in range(n):
        v = x - x[:, [k]] - x[[k], :]
        v[k, :] = -np.inf
        v[:, k] = -np.inf
        np.fill_diagonal(v, -np.inf)
        kworst = float(v.max()) if n > 1 else 0.0
        if kworst > worst:
            worst = kworst
        if kworst > threshold:
            for i, j in np.argwhere(v > threshold):
                if i < j:
                    found.append((float(v[i, j]), int(i), int(j), int(k)))
    return worst, found


def solve_metric_lp(
    problem: LPProblem,
    tol_feas: float = DEFAULT_TOL_FEAS,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> FractionalSolution:
    """Solve the metric LP by lazy constraint generation.

    Each round is an exact HiGHS solve of the relaxation restricted to the
    constraints found so far, so its value never exceeds the full LP
    optimum. Rounds stop once the worst triangle violation is at most
    ``tol_feas`` or after ``max_iters`` rounds (then ``converged`` is False
    and the lower bound must not be used as a certificate).
    """
    if tol_feas <= 0:
        raise ValueError("tol_feas must be positive")
    n = problem.n
    idx = _pair_index(n)
    nvars = len(idx)
    fixed = problem.fixed_one

    if nvars == 0:
        return FractionalSolution(
            x=np.zeros((max(n, 1), max(n, 1))),
            feasibility_violation=0.0,
            objective_value=problem.constant,
            lower_bound=problem.constant,
            converged=True,
            rounds=0,
            bound_history=(problem.constant,),
        )

    cost = np.zeros(nvars)
    for pair, w in problem.pos.items():
        cost[idx[pair]] += w
    for pair, w in problem.neg.items():
        cost[idx[pair]] -= w

    def pinned(pair: tuple[int, int]) -> bool:
        return pair in fixed

    def key(i: int, j: int) -> tuple[int, int]:
        return (i, j) if i < j else (j, i)

    rows: list[tuple[tuple[int, ...], tuple[float, ...], float]] = []
    seen: set[tuple[int, int, int]] = set()

    def add_constraint(i: int, j: int, k: int) -> bool:
        """Row for x_ij - x_ik - x_jk <= 0 with pinned values substituted."""
        tag = (i, j, k)
        if tag in seen:
            return False
        seen.add(tag)
        cols: list[int] = []
        coefs: list[float] = []
        rhs = 0.0
        for pair, coef in ((key(i, j), 1.0), (key(i, k), -1.0), (key(j, k), -1.0)):
            if pinned(pair):
                rhs -= coef
            else:
                cols.append(idx[pair])
                coefs.append(coef)
        if not cols:
            return False
        rows.append((tuple(cols), tuple(coefs), rhs))
        return True

    # idx is insertion-ordered lexicographically, matching variable order;
    # pinned pairs stay as variables with a degenerate box and zero cost
    bounds = [(1.0, 1.0) if pinned(pair) else (0.0, 1.0) for pair in idx]

    history: list[float] = []
    x_mat = np.zeros((n, n))
    worst = math.inf
    rounds = 0
    converged = False
    while rounds < max_iters:
        rounds += 1
        if rows:
            data, indices, indptr = [], [], [0]
            for cols, coefs, _ in rows:
                indices.extend(cols)
                data.extend(coefs)
                indptr.append(len(indices))
            a_ub = csr_matrix((data, indices, indptr), shape=(len(rows), nvars))
            b_ub = np.array([r[2] for r in rows])
        else:
            a_ub = None
            b_ub = None
        res = linprog(cost, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
        if not res.success:
            raise RuntimeError(f"LP relaxation solve failed: {res.message}")
        history.append(float(res.fun) + problem.constant)

        x_flat = np.clip(res.x, 0.0, 1.0) + 0.0  # also normalizes -0.0
        x_mat = np.zeros((n, n))
        for pair, k in idx.items():
            val = 1.0 if pinned(pair) else float(x_flat[k])
            x_mat[pair[0], pair[1]] = val
            x_mat[pair[1], pair[0]] = val

        worst, found = _violations(x_mat, min(tol_feas * 0.5, 1e-9))
        if worst <= tol_feas:
            converged = True
            break
        found.sort(key=lambda t: (-t[0], t[1], t[2], t[3]))
        added = 0
        for _, i, j, k in found:
            if add_constraint(i, j, k):
                added += 1
                if added >= MAX_NEW_CONSTRAINTS:
                    break
        if added == 0:
            # Violations persist but every such constraint is already in
            # the pool: solver tolerance floor reached.
            converged = worst <= max(tol_feas, 1e-7)
            break

    x_vec = np.array([x_mat[i, j] for (i, j) in idx])
    objective = float(np.dot(cost, x_vec)) + problem.constant
    return FractionalSolution(
        x=x_mat,
        feasibility_violation=float(worst),
        objective_value=objective,
        lower_bound=history[-1],
        converged=converged,
        rounds=rounds,
        bound_history=tuple(history),
    )


def solve_cc_lp(
    inst: CCInstance,
    tol_feas: float = DEFAULT_TOL_FEAS,
    max_iters: int = DEFAULT_MAX_ITERS,
    dense_limit: int = DEFAULT_DENSE_LIMIT,
) -> FractionalSolution:
    """Build and solve the metric LP for a CC instance."""
    return solve_metric_lp(build_lp(inst, dense_limit), tol_feas, max_iters)


def lp_lower_bound_check(
    problem: LPProblem, solution: FractionalSolution, ilp_value: float
) -> bool:
    """Certificate check: the relaxation bound must not exceed the integer
    optimum. Refuses unconverged solutions whose bound is no certificate."""
    if not solution.converged:
        raise ValueError("lower bound of an unconverged solve is not a certificate")
    return solution.lower_bound <= ilp_value + 1e-9

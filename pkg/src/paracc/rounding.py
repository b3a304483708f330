"""LP rounding: random pivot, threshold rounding, delta sweeps, a runtime
checker for the generic rounding conditions, and a numeric verifier for the
per-case bound table behind the parametric approximation guarantees."""

from __future__ import annotations

import logging
import math
import random
from collections.abc import Sequence
from dataclasses import dataclass, field

from . import exact, lp as lpmod
from .graphs import (
    BipartiteGraph,
    CCInstance,
    Clustering,
    build_cc_bicluster_deletion,
    build_cc_from_pbcc,
    cc_objective,
)
from .objectives import pbcc_objective

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RoundingParams:
    delta: float
    alpha_claimed: float | None = None
    rng_seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.delta < 1.0:
            raise ValueError(f"delta must lie in (0,1), got {self.delta}")


def pivot(n: int, positive: Sequence[set[int]], seed: int = 0) -> Clustering:
    """Recursive random-pivot clustering of a complete signed graph given
    by its positive adjacency sets (absent pairs are negative). Each step
    picks a uniform pivot among remaining nodes, clusters it with its
    remaining positive neighbors, and recurses on the rest."""
    rng = random.Random(seed)
    remaining = set(range(n))
    assign = [0] * n
    cid = 0
    while remaining:
        k = rng.choice(sorted(remaining))
        cluster = (positive[k] & remaining) | {k}
        for v in cluster:
            assign[v] = cid
        cid += 1
        remaining -= cluster
    return Clustering(assign)


def threshold_positive(x, n: int, delta: float) -> list[set[int]]:
    """Positive adjacency of the thresholded graph: pairs with x_ij < delta."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if x[i, j] < delta:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def gen_round(
    inst: CCInstance, x: lpmod.FractionalSolution, params: RoundingParams
) -> Clustering:
    """Threshold the LP distances (x_ij < delta is positive, the rest
    negative) and run pivot with the given seed."""
    adj = threshold_positive(x.x, inst.n, params.delta)
    return pivot(inst.n, adj, params.rng_seed)


def delta_sweep(
    inst: CCInstance,
    x: lpmod.FractionalSolution,
    grid: Sequence[float],
    seeds: Sequence[int] = (0,),
) -> tuple[Clustering, list[tuple[float, int, float]]]:
    """Round at every (delta, seed) pair and keep the cheapest clustering.
    Ties break toward smaller delta, then smaller seed. Returns the winner
    plus the full (delta, seed, objective) table in evaluation order."""
    if not grid:
        raise ValueError("delta grid must be nonempty")
    rows: list[tuple[float, int, float]] = []
    best: Clustering | None = None
    best_key: tuple[float, float, int] | None = None
    for delta in sorted(grid):
        for seed in sorted(seeds):
            c = gen_round(inst, x, RoundingParams(delta=delta, rng_seed=seed))
            obj = cc_objective(inst, c)
            rows.append((delta, seed, obj))
            key = (obj, delta, seed)
            if best_key is None or key < best_key:
                best_key = key
                best = c
    assert best is not None
    return best, rows


@dataclass(frozen=True)
class PairWitness:
    pair: tuple[int, int]
    lhs: float
    cost: float
    ratio: float


@dataclass(frozen=True)
class TriangleWitness:
    triangle: tuple[int, int, int]
    lhs: float
    cost: float
    ratio: float


@dataclass(frozen=True)
class Theorem31Report:
    passed: bool
    alpha: float
    delta: float
    worst_pair: PairWitness | None
    worst_triangle: TriangleWitness | None
    bad_triangles: int

    @property
    def worst_ratio(self) -> float:
        r = 0.0
        if self.worst_pair is not None:
            r = max(r, self.worst_pair.ratio)
        if self.worst_triangle is not None:
            r = max(r, self.worst_triangle.ratio)
        return r


def _pair_cost(wp: float, wn: float, xv: float) -> float:
    neg = 0.0 if xv >= 1.0 else wn * (1.0 - xv)
    return wp * xv + neg


def _ratio(lhs: float, cost: float) -> float:
    if lhs <= 0.0:
        return 0.0
    if cost <= 0.0:
        return math.inf
    return lhs / cost


def theorem31_check(
    inst: CCInstance,
    x: lpmod.FractionalSolution,
    delta: float,
    alpha: float,
    tol: float = 1e-9,
) -> Theorem31Report:
    """Check the two sufficient rounding conditions on the thresholded
    graph: per-pair, the opposite-sign weight is at most alpha times the
    pair's LP cost; per bad triangle (two thresholded-positive edges and
    one negative), the disagreement weight is at most alpha times the sum
    of the three LP costs. Reports the worst-ratio witnesses."""
    n = inst.n
    xm = x.x
    cost = [[0.0] * n for _ in range(n)]
    pos_w = [[0.0] * n for _ in range(n)]
    neg_w = [[0.0] * n for _ in range(n)]
    for i, j, wp, wn in inst.pairs_with_weights():
        c = _pair_cost(wp, wn, xm[i, j])
        cost[i][j] = cost[j][i] = c
        pos_w[i][j] = pos_w[j][i] = wp
        neg_w[i][j] = neg_w[j][i] = wn

    worst_pair: PairWitness | None = None
    ok = True
    for i in range(n):
        for j in range(i + 1, n):
            lhs = neg_w[i][j] if xm[i, j] < delta else pos_w[i][j]
            c = cost[i][j]
            if lhs > alpha * c + tol * max(1.0, lhs):
                ok = False
            r = _ratio(lhs, c)
            if worst_pair is None or r > worst_pair.ratio:
                worst_pair = PairWitness((i, j), lhs, c, r)

    adj = threshold_positive(xm, n, delta)
    worst_tri: TriangleWitness | None = None
    bad = 0
    for j in range(n):
        nbrs = sorted(adj[j])
        for a in range(len(nbrs)):
            for b in range(a + 1, len(nbrs)):
                i, k = nbrs[a], nbrs[b]
                if k in adj[i]:
                    continue  # all three positive: not a bad triangle
                bad += 1
                lhs = pos_w[i][j] + pos_w[j][k] + neg_w[i][k]
                csum = cost[i][j] + cost[j][k] + cost[i][k]
                if lhs > alpha * csum + tol * max(1.0, lhs):
                    ok = False
                r = _ratio(lhs, csum)
                if worst_tri is None or r > worst_tri.ratio:
                    worst_tri = TriangleWitness((i, j, k), lhs, csum, r)
    return Theorem31Report(
        passed=ok,
        alpha=alpha,
        delta=delta,
        worst_pair=worst_pair,
        worst_triangle=worst_tri,
        bad_triangles=bad,
    )


@dataclass(frozen=True)
class CaseBound:
    name: str
    lhs: float
    f_delta: float
    margin: float  # alpha * f_delta - lhs
    applicable: bool

    @property
    def passed(self) -> bool:
        return (not self.applicable) or self.margin >= -1e-12


@dataclass(frozen=True)
class CaseBoundReport:
    mu: float
    beta: float
    delta: float
    alpha: float
    cases: tuple[CaseBound, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def case(self, name: str) -> CaseBound:
        for c in self.cases:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_case_bounds(mu: float, beta: float, delta: float, alpha: float) -> CaseBoundReport:
    """Evaluate the nine bad-triangle case bounds L <= alpha * f(delta).

    The second 1a bound is only claimed for beta >= 1/2 and is marked
    inapplicable below that. Margins are alpha*f - L; a tight case sits at
    margin 0 up to roundoff.
    """
    if not (0.0 <= mu <= 1.0 and 0.0 <= beta <= 1.0):
        raise ValueError("mu and beta must lie in [0,1]")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0,1)")
    if alpha <= 0.0:
        raise ValueError("alpha must be positive")
    d = delta
    rows = [
        ("1a_any", 1.0, mu * (1 - d) + beta * (1 - d), True),
        ("1a_beta_half", 1.0, mu * (1 - d) + beta + d * (1 - 3 * beta), beta >= 0.5),
        ("1b", 1.0 - beta, mu * (1 - d) + d * (1 - beta), True),
        ("1c", 0.0, mu * (1 - d) + d * (1 - beta), True),
        ("1d", beta, mu * (1 - d) + beta * (2 - 3 * d), True),
        ("2ab", (1.0 - beta) + mu, beta * (1 - d) + mu * (1 - 2 * d), True),
        ("2c", 2.0 * (1.0 - beta) + mu, (1 - beta) * d + mu * (1 - 2 * d), True),
        ("2d", mu, 2 * beta * (1 - d) + mu * (1 - 2 * d), True),
        ("3", mu, mu * (3 - 4 * d), True),
    ]
    cases = tuple(
        CaseBound(name, lhs, f, alpha * f - lhs, applicable)
        for (name, lhs, f, applicable) in rows
    )
    return CaseBoundReport(mu=mu, beta=beta, delta=delta, alpha=alpha, cases=cases)


def theorem5_delta(beta: float) -> float:
    """Threshold 2*beta/(6*beta - 1) for the mu = 0, beta >= 1/2 regime."""
    if beta < 0.5:
        raise ValueError("regime requires beta >= 1/2")
    return 2.0 * beta / (6.0 * beta - 1.0)


def theorem5_alpha(beta: float) -> float:
    if beta < 0.5:
        raise ValueError("regime requires beta >= 1/2")
    return 6.0 - 1.0 / beta


THEOREM6_DELTA = 0.4
THEOREM6_ALPHA = 5.0


@dataclass
class RoundResult:
    clustering: Clustering
    regime: str
    delta: float | None
    alpha_claimed: float | None
    objective: float
    lp: lpmod.FractionalSolution | None = None
    notice: str | None = None
    sweep_rows: list[tuple[float, int, float]] = field(default_factory=list)


DEFAULT_SWEEP_GRID = tuple(round(0.05 * t, 10) for t in range(1, 20))


def pbcc_round(
    g: BipartiteGraph,
    mu1: float,
    mu2: float,
    beta: float,
    mode: str = "auto",
    delta: float | None = None,
    seed: int = 0,
    tol_feas: float = lpmod.DEFAULT_TOL_FEAS,
    max_iters: int = lpmod.DEFAULT_MAX_ITERS,
) -> RoundResult:
    """Round a PBCC instance with the regime-appropriate threshold.

    Auto mode: the matching regime (min mu >= 1-beta) is delegated to
    maximum matching; mu = 0 with beta above the bicluster threshold uses
    the pinned-negatives deletion LP at delta 1/2; mu = 0 with beta >= 1/2
    uses delta = 2b/(6b-1); equal positive mus with beta >= 1/2 use
    delta = 2/5; anything else falls back to a delta sweep with no claimed
    factor. Fixed mode rounds at the given delta.
    """
    for name, v in (("mu1", mu1), ("mu2", mu2), ("beta", beta)):
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"{name} must lie in [0,1], got {v}")
    if mode not in ("auto", "fixed"):
        raise ValueError("mode must be 'auto' or 'fixed'")
    if mode == "fixed":
        if delta is None:
            raise ValueError("fixed mode requires a delta")
        inst = build_cc_from_pbcc(g, mu1, mu2, beta)
        sol = lpmod.solve_cc_lp(inst, tol_feas, max_iters)
        c = gen_round(inst, sol, RoundingParams(delta=delta, rng_seed=seed))
        return RoundResult(
            clustering=c,
            regime="fixed",
            delta=delta,
            alpha_claimed=None,
            objective=pbcc_objective(g, c, mu1, mu2, beta),
            lp=sol,
        )

    if min(mu1, mu2) >= 1.0 - beta:
        notice = "matching regime (min mu >= 1 - beta): solved via maximum matching"
        log.info(notice)
        m = exact.hopcroft_karp(g)
        c = exact.matching_clustering(g, m)
        return RoundResult(
            clustering=c,
            regime="matching",
            delta=None,
            alpha_claimed=1.0,
            objective=pbcc_objective(g, c, mu1, mu2, beta),
            notice=notice,
        )

    if mu1 == 0.0 and mu2 == 0.0:
        bicluster_threshold = (g.n1 * g.n2) / (g.n1 * g.n2 + 1.0)
        if beta > bicluster_threshold:
            inst = build_cc_bicluster_deletion(g)
            sol = lpmod.solve_cc_lp(inst, tol_feas, max_iters)
            c = gen_round(inst, sol, RoundingParams(delta=0.5, rng_seed=seed))
            return RoundResult(
                clustering=c,
                regime="bicluster_deletion",
                delta=0.5,
                alpha_claimed=4.0,
                objective=pbcc_objective(g, c, mu1, mu2, beta),
                lp=sol,
            )
        if beta >= 0.5:
            d = theorem5_delta(beta)
            inst = build_cc_from_pbcc(g, mu1, mu2, beta)
            sol = lpmod.solve_cc_lp(inst, tol_feas, max_iters)
            c = gen_round(inst, sol, RoundingParams(delta=d, rng_seed=seed))
            return RoundResult(
                clustering=c,
                regime="mu_zero",
                delta=d,
                alpha_claimed=theorem5_alpha(beta),
                objective=pbcc_objective(g, c, mu1, mu2, beta),
                lp=sol,
            )
    elif mu1 == mu2 and mu1 > 0.0 and beta >= 0.5:
        inst = build_cc_from_pbcc(g, mu1, mu2, beta)
        sol = lpmod.solve_cc_lp(inst, tol_feas, max_iters)
        c = gen_round(inst, sol, RoundingParams(delta=THEOREM6_DELTA, rng_seed=seed))
        return RoundResult(
            clustering=c,
            regime="equal_mu",
            delta=THEOREM6_DELTA,
            alpha_claimed=THEOREM6_ALPHA,
            objective=pbcc_objective(g, c, mu1, mu2, beta),
            lp=sol,
        )

    notice = "no guarantee regime: falling back to a delta sweep"
    log.info(notice)
    inst = build_cc_from_pbcc(g, mu1, mu2, beta)
    sol = lpmod.solve_cc_lp(inst, tol_feas, max_iters)
    c, rows = delta_sweep(inst, sol, DEFAULT_SWEEP_GRID, seeds=(seed,))
    best_delta = min(rows, key=lambda r: (r[2], r[0], r[1]))[0]
    return RoundResult(
        clustering=c,
        regime="sweep",
        delta=best_delta,
        alpha_claimed=None,
        objective=pbcc_objective(g, c, mu1, mu2, beta),
        lp=sol,
        notice=notice,
        sweep_rows=rows,
    )

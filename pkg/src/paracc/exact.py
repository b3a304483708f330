"""Exact small-instance solvers: brute-force optima over set partitions,
brute-force bipartition quotients, and maximum bipartite matching for the
polynomial parameter regime."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import objectives
from .graphs import BipartiteGraph, CCInstance, Clustering, Hypergraph, SizeLimitError

MAX_BRUTE_NODES = 12
MAX_BIPARTITION_NODES = 20


@dataclass(frozen=True)
class Matching:
    """Disjoint set of (side-1, side-2) pairs, side-local indices."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        left = [i for (i, _) in self.pairs]
        right = [j for (_, j) in self.pairs]
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise ValueError("matching reuses a node")

    def __len__(self) -> int:
        return len(self.pairs)


def brute_force_optimum(
    inst: CCInstance,
    max_n: int = MAX_BRUTE_NODES,
    incumbent: tuple[Clustering, float] | None = None,
) -> tuple[Clustering, float]:
    """Minimum-cost clustering by enumerating all set partitions as
    restricted-growth strings, pruning branches whose partial cost already
    reaches the incumbent.

    Ties go to the lexicographically smallest growth string among
    enumerated partitions; when ``incumbent`` is supplied and never beaten
    strictly, it is returned as-is.
    """
    n = inst.n
    if n > max_n:
        raise SizeLimitError(f"brute force limited to {max_n} nodes, got {n}")
    if n == 0:
        return Clustering([]), 0.0

    sep = [[0.0] * n for _ in range(n)]
    tog = [[0.0] * n for _ in range(n)]
    forbidden = [[0] * n for _ in range(n)]
    for i, j, wp, wn in inst.pairs_with_weights():
        sep[i][j] = sep[j][i] = wp
        if math.isinf(wn):
            forbidden[i][j] = forbidden[j][i] = 1
        else:
            tog[i][j] = tog[j][i] = wn
    # Cost of separating v from everything assigned before it; assignment
    # order is fixed to 0..n-1 so this is a plain prefix sum.
    prefix_sep = [math.fsum(sep[u][v] for u in range(v)) for v in range(n)]
    diff = [[tog[u][v] - sep[u][v] for v in range(n)] for u in range(n)]

    best_cost = math.inf
    best_clustering: Clustering | None = None
    best_rgs: list[int] | None = None
    if incumbent is not None:
        best_clustering, best_cost = incumbent

    rgs = [0] * n
    # Per live cluster c: delta_to[c][v] = sum over u in c of tog[u][v]-sep[u][v],
    # and forbid[c][v] = count of must-separate partners of v inside c.
    delta_to = [[0.0] * n for _ in range(n)]
    forbid = [[0] * n for _ in range(n)]

    def descend(v: int, used: int, cost: float):
        nonlocal best_cost, best_rgs
        if v == n:
            if cost < best_cost:
                best_cost = cost
                best_rgs = rgs.copy()
            return
        for c in range(used + 1):
            if c < used and forbid[c][v]:
                continue
            extra = prefix_sep[v] + (delta_to[c][v] if c < used else 0.0)
            new_cost = cost + extra
            if not new_cost < best_cost:
                continue
            rgs[v] = c
            drow = delta_to[c]
            frow = forbid[c]
            dv = diff[v]
            fv = forbidden[v]
            for u in range(v + 1, n):
                drow[u] += dv[u]
                frow[u] += fv[u]
            descend(v + 1, max(used, c + 1), new_cost)
            for u in range(v + 1, n):
                drow[u] -= dv[u]
                frow[u] -= fv[u]
        rgs[v] = 0

    descend(0, 0, 0.0)
    if best_rgs is None:
        if incumbent is None:
            raise RuntimeError("no partition enumerated")
        return best_clustering, best_cost
    return Clustering(best_rgs), best_cost


def brute_force_bipartition(
    h: Hypergraph, quotient: str = "psi", cut_kind: str = "boundary"
) -> tuple[frozenset[int], float]:
    """Minimize psi or the hypergraph normalized cut over all nontrivial
    bipartitions (node 0 kept on the S side to halve the enumeration)."""
    n = h.n
    if n > MAX_BIPARTITION_NODES:
        raise SizeLimitError(f"bipartition search limited to {MAX_BIPARTITION_NODES} nodes")
    if n < 2:
        raise ValueError("need at least two nodes")
    if quotient == "psi":
        evaluate = lambda s: objectives.psi(h, s, cut_kind)
    elif quotient == "hncut":
        evaluate = lambda s: objectives.hyper_ncut(h, s, cut_kind)
    else:
        raise ValueError(f"unknown quotient {quotient!r}")
    total_vol = h.volume()
    best_set: frozenset[int] | None = None
    best_val = math.inf
    for mask in range(0, 1 << (n - 1)):
        s = frozenset([0] + [v for v in range(1, n) if mask >> (v - 1) & 1])
        if len(s) == n:
            continue
        vol = h.volume(s)
        if vol == 0 or vol == total_vol:
            continue  # quotient undefined on a zero-volume side
        val = evaluate(s)
        if val < best_val:
            best_val = val
            best_set = s
    if best_set is None:
        raise ValueError("no bipartition with positive volume on both sides")
    return best_set, best_val


def hopcroft_karp(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality bipartite matching. Deterministic: BFS layers and
    DFS augmentation scan adjacency in sorted order."""
    INF = g.n1 + g.n2 + 1
    match1 = [-1] * g.n1
    match2 = [-1] * g.n2
    dist = [0] * g.n1

    def bfs() -> bool:
        queue = []
        for i in range(g.n1):
            if match1[i] == -1:
                dist[i] = 0
                queue.append(i)
            else:
                dist[i] = INF
        found = False
        head = 0
        while head < len(queue):
            i = queue[head]
            head += 1
            for j in g.adj1[i]:
                i2 = match2[j]
                if i2 == -1:
                    found = True
                elif dist[i2] == INF:
                    dist[i2] = dist[i] + 1
                    queue.append(i2)
        return found

    def dfs(i: int) -> bool:
        for j in g.adj1[i]:
            i2 = match2[j]
            if i2 == -1 or (dist[i2] == dist[i] + 1 and dfs(i2)):
                match1[i] = j
                match2[j] = i
                return True
        dist[i] = INF
        return False

    while bfs():
        for i in range(g.n1):
            if match1[i] == -1:
                dfs(i)
    pairs = tuple((i, match1[i]) for i in range(g.n1) if match1[i] != -1)
    return Matching(pairs)


def matching_clustering(g: BipartiteGraph, m: Matching) -> Clustering:
    """Clustering over the combined node set where each matched pair forms a
    2-cluster and unmatched nodes stay singletons."""
    assign = list(range(g.n1 + g.n2))
    for (i, j) in m.pairs:
        assign[g.n1 + j] = assign[i]
    return Clustering(assign)

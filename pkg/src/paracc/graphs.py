"""Core immutable data model: hypergraphs, bipartite graphs, weighted graphs,
signed correlation-clustering instances, and clusterings.

Node ids are dense 0-based integers everywhere. External 1-based file formats
are translated at the I/O boundary (see :mod:`paracc.evalio`). For bipartite
graphs embedded into a single node universe, side-1 node ``i`` keeps id ``i``
and side-2 node ``j`` becomes ``n1 + j``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence


class SizeLimitError(ValueError):
    """Instance exceeds a configured exact-solve or dense-storage limit."""


def _check_pair(i: int, j: int, n: int) -> tuple[int, int]:
    if i == j:
        raise ValueError(f"self-pair ({i},{i}) not allowed")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"pair ({i},{j}) out of range for n={n}")
    return (i, j) if i < j else (j, i)


class Hypergraph:
    """A node set 0..n-1 plus a multiset of weighted hyperedges.

    Hyperedges may repeat and singletons are allowed (they contribute to
    degrees but can never be cut). The degree of a node is the number of
    hyperedges containing it, independent of hyperedge weights. Node weights
    default to 1; use :meth:`with_node_weights` for degree weighting.
    """

    __slots__ = ("n", "edges", "edge_weights", "node_weights", "degrees")

    def __init__(
        self,
        n: int,
        edges: Iterable[Iterable[int]],
        edge_weights: Sequence[float] | None = None,
        node_weights: Sequence[float] | None = None,
    ):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.n = n
        norm = []
        for e in edges:
            fs = frozenset(e)
            if not fs:
                raise ValueError("empty hyperedge")
            for v in fs:
                if not (0 <= v < n):
                    raise ValueError(f"node {v} out of range for n={n}")
            norm.append(fs)
        self.edges = tuple(norm)
        if edge_weights is None:
            self.edge_weights = (1.0,) * len(self.edges)
        else:
            if len(edge_weights) != len(self.edges):
                raise ValueError("edge_weights length mismatch")
            if any(w <= 0 for w in edge_weights):
                raise ValueError("hyperedge weights must be positive")
            self.edge_weights = tuple(float(w) for w in edge_weights)
        deg = [0] * n
        for fs in self.edges:
            for v in fs:
                deg[v] += 1
        self.degrees = tuple(deg)
        if node_weights is None:
            self.node_weights = (1.0,) * n
        else:
            if len(node_weights) != n:
                raise ValueError("node_weights length mismatch")
            if any(w < 0 for w in node_weights):
                raise ValueError("node weights must be nonnegative")
            self.node_weights = tuple(float(w) for w in node_weights)

    def with_node_weights(self, mode: str) -> "Hypergraph":
        """Return a copy whose node weights are unit or degree based."""
        if mode == "unit":
            w = (1.0,) * self.n
        elif mode == "degree":
            w = tuple(float(d) for d in self.degrees)
        else:
            raise ValueError(f"unknown weight mode {mode!r}")
        return Hypergraph(self.n, self.edges, self.edge_weights, w)

    def volume(self, nodes: Iterable[int] | None = None) -> int:
        """Sum of degrees over ``nodes`` (all nodes when omitted)."""
        if nodes is None:
            return sum(self.degrees)
        return sum(self.degrees[v] for v in nodes)

    @property
    def m(self) -> int:
        return len(self.edges)


class BipartiteGraph:
    """Unweighted bipartite graph with side sizes n1, n2 and edges (i, j)
    indexed locally per side."""

    __slots__ = ("n1", "n2", "edges", "adj1", "adj2")

    def __init__(self, n1: int, n2: int, edges: Iterable[tuple[int, int]]):
        if n1 < 0 or n2 < 0:
            raise ValueError("side sizes must be nonnegative")
        self.n1 = n1
        self.n2 = n2
        es = set()
        for (i, j) in edges:
            if not (0 <= i < n1 and 0 <= j < n2):
                raise ValueError(f"edge ({i},{j}) out of range for {n1}x{n2}")
            es.add((i, j))
        self.edges = frozenset(es)
        adj1: list[list[int]] = [[] for _ in range(n1)]
        adj2: list[list[int]] = [[] for _ in range(n2)]
        for (i, j) in sorted(es):
            adj1[i].append(j)
            adj2[j].append(i)
        self.adj1 = tuple(tuple(a) for a in adj1)
        self.adj2 = tuple(tuple(a) for a in adj2)

    @property
    def n(self) -> int:
        """Total node count in the combined 0..n1+n2-1 universe."""
        return self.n1 + self.n2

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def combined_id(self, side: int, v: int) -> int:
        return v if side == 1 else self.n1 + v


class WeightedGraph:
    """Undirected graph with positive edge weights and nonnegative node
    weights. Parallel edges are merged by weight summation; self-loops are
    rejected."""

    __slots__ = ("n", "edge_weights", "node_weights", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int, float]],
        node_weights: Sequence[float] | None = None,
    ):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.n = n
        ew: dict[tuple[int, int], float] = {}
        for (i, j, w) in edges:
            key = _check_pair(i, j, n)
            if w <= 0:
                raise ValueError(f"edge weight must be positive, got {w}")
            ew[key] = ew.get(key, 0.0) + float(w)
        self.edge_weights = dict(sorted(ew.items()))
        if node_weights is None:
            self.node_weights = (1.0,) * n
        else:
            if len(node_weights) != n:
                raise ValueError("node_weights length mismatch")
            if any(w < 0 for w in node_weights):
                raise ValueError("node weights must be nonnegative")
            self.node_weights = tuple(float(w) for w in node_weights)
        adj: list[dict[int, float]] = [dict() for _ in range(n)]
        for (i, j), w in self.edge_weights.items():
            adj[i][j] = w
            adj[j][i] = w
        self._adj = tuple(adj)

    def neighbors(self, v: int) -> dict[int, float]:
        return self._adj[v]

    def weighted_degree(self, v: int) -> float:
        return math.fsum(self._adj[v].values())

    def weighted_degrees(self) -> list[float]:
        return [self.weighted_degree(v) for v in range(self.n)]

    def cut_weight(self, inside: set[int] | frozenset[int]) -> float:
        """Total weight of edges with exactly one endpoint in ``inside``."""
        return math.fsum(
            w for (i, j), w in self.edge_weights.items() if (i in inside) != (j in inside)
        )

    @property
    def m(self) -> int:
        return len(self.edge_weights)


class Clustering:
    """Total assignment node -> cluster id, canonicalized so ids are
    0..k-1 in order of first appearance."""

    __slots__ = ("assignment", "k")

    def __init__(self, assignment: Sequence[int]):
        remap: dict[int, int] = {}
        canon = []
        for a in assignment:
            if a not in remap:
                remap[a] = len(remap)
            canon.append(remap[a])
        self.assignment = tuple(canon)
        self.k = len(remap)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "Clustering":
        assign = [-1] * n
        for cid, s in enumerate(sets):
            for v in s:
                if assign[v] != -1:
                    raise ValueError(f"node {v} appears in two clusters")
                assign[v] = cid
        if any(a == -1 for a in assign):
            raise ValueError("clustering does not cover all nodes")
        return cls(assign)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def together(self, i: int, j: int) -> bool:
        return self.assignment[i] == self.assignment[j]

    def separated(self, i: int, j: int) -> bool:
        """The z_ij indicator: 1 when i and j live in different clusters."""
        return self.assignment[i] != self.assignment[j]

    def clusters(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, a in enumerate(self.assignment):
            out[a].append(v)
        return out

    def restrict(self, nodes: Sequence[int]) -> "Clustering":
        """Clustering induced on a subset of nodes (re-canonicalized)."""
        return Clustering([self.assignment[v] for v in nodes])

    def __eq__(self, other) -> bool:
        return isinstance(other, Clustering) and self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash(self.assignment)

    def __repr__(self) -> str:
        return f"Clustering({list(self.assignment)})"


class CCInstance:
    """Complete weighted signed-graph view of a clustering problem.

    Positive weights live in an explicit pair map. Negative weights are
    either an explicit pair map or the parametric rule ``lam * w_i * w_j``
    over all pairs. Pairs in ``fixed_one`` are hard "must separate"
    constraints (LP distance pinned to 1); putting such a pair in one
    cluster costs infinity.
    """

    __slots__ = ("n", "positive", "explicit_negative", "lam", "node_weights", "fixed_one")

    def __init__(
        self,
        n: int,
        positive: dict[tuple[int, int], float],
        explicit_negative: dict[tuple[int, int], float] | None = None,
        lam: float | None = None,
        node_weights: Sequence[float] | None = None,
        fixed_one: Iterable[tuple[int, int]] = (),
    ):
        if (explicit_negative is None) == (lam is None):
            raise ValueError("exactly one of explicit_negative / lam must be given")
        if lam is not None and lam < 0:
            raise ValueError("lam must be nonnegative")
        self.n = n
        pos = {}
        for (i, j), w in positive.items():
            key = _check_pair(i, j, n)
            if w < 0:
                raise ValueError("positive weights must be nonnegative")
            if w > 0:
                pos[key] = float(w)
        self.positive = dict(sorted(pos.items()))
        if explicit_negative is not None:
            neg = {}
            for (i, j), w in explicit_negative.items():
                key = _check_pair(i, j, n)
                if w < 0:
                    raise ValueError("negative weights must be nonnegative")
                if w > 0:
                    neg[key] = float(w)
            self.explicit_negative = dict(sorted(neg.items()))
            self.lam = None
            self.node_weights = None
        else:
            self.explicit_negative = None
            self.lam = float(lam)
            if node_weights is None:
                node_weights = (1.0,) * n
            if len(node_weights) != n:
                raise ValueError("node_weights length mismatch")
            self.node_weights = tuple(float(w) for w in node_weights)
        self.fixed_one = frozenset(_check_pair(i, j, n) for (i, j) in fixed_one)

    def pos_weight(self, i: int, j: int) -> float:
        return self.positive.get(_check_pair(i, j, self.n), 0.0)

    def neg_weight(self, i: int, j: int) -> float:
        """Negative weight of the pair; infinity for must-separate pairs."""
        key = _check_pair(i, j, self.n)
        if key in self.fixed_one:
            return math.inf
        if self.explicit_negative is not None:
            return self.explicit_negative.get(key, 0.0)
        return self.lam * self.node_weights[i] * self.node_weights[j]

    def total_positive(self) -> float:
        return math.fsum(self.positive.values())

    def total_negative(self) -> float:
        """Sum of finite negative weights (fixed pairs excluded)."""
        if self.explicit_negative is not None:
            return math.fsum(
                w for k, w in self.explicit_negative.items() if k not in self.fixed_one
            )
        ws = self.node_weights
        total = math.fsum(ws)
        sq = math.fsum(w * w for w in ws)
        base = self.lam * 0.5 * (total * total - sq)
        if self.fixed_one:
            base -= math.fsum(self.lam * ws[i] * ws[j] for (i, j) in sorted(self.fixed_one))
        return base

    def pairs_with_weights(self):
        """Yield (i, j, w_pos, w_neg) for every pair, lexicographic order.

        O(n^2); intended for the dense-limit LP path and small oracles.
        """
        for i in range(self.n):
            for j in range(i + 1, self.n):
                wp = self.positive.get((i, j), 0.0)
                if (i, j) in self.fixed_one:
                    yield i, j, wp, math.inf
                elif self.explicit_negative is not None:
                    yield i, j, wp, self.explicit_negative.get((i, j), 0.0)
                else:
                    yield i, j, wp, self.lam * self.node_weights[i] * self.node_weights[j]


def build_cc_from_pbcc(g: BipartiteGraph, mu1: float, mu2: float, beta: float) -> CCInstance:
    """Signed complete instance for parametric bipartite correlation
    clustering: cross edges get positive weight 1-beta, cross non-edges
    negative weight beta, side-1 pairs negative mu1, side-2 pairs negative
    mu2. Side-2 node j maps to combined id n1+j.
    """
    for name, v in (("mu1", mu1), ("mu2", mu2), ("beta", beta)):
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"{name} must lie in [0,1], got {v}")
    n1, n2 = g.n1, g.n2
    positive: dict[tuple[int, int], float] = {}
    negative: dict[tuple[int, int], float] = {}
    for i in range(n1):
        for j in range(n2):
            pair = (i, n1 + j)
            if (i, j) in g.edges:
                positive[pair] = 1.0 - beta
            else:
                negative[pair] = beta
    for i in range(n1):
        for j in range(i + 1, n1):
            negative[(i, j)] = mu1
    for i in range(n2):
        for j in range(i + 1, n2):
            negative[(n1 + i, n1 + j)] = mu2
    return CCInstance(n1 + n2, positive, explicit_negative=negative)


def build_cc_from_expansion(
    g: WeightedGraph, lam: float, weight_mode: str = "degree"
) -> CCInstance:
    """Correlation-clustering instance over an expanded graph: the graph's
    edges are the positive edges and every pair carries a parametric
    negative weight lam * w_i * w_j.

    ``weight_mode='degree'`` uses the node weights stored on the graph
    (degree weights when the source hypergraph was degree-weighted; star
    auxiliaries carry 0 so their negative edges vanish). ``'unit'`` maps
    every positive stored weight to 1 and keeps zeros at 0.
    """
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    if weight_mode == "degree":
        ws = g.node_weights
    elif weight_mode == "unit":
        ws = tuple(1.0 if w > 0 else 0.0 for w in g.node_weights)
    else:
        raise ValueError(f"unknown weight mode {weight_mode!r}")
    positive = {pair: w for pair, w in g.edge_weights.items()}
    return CCInstance(g.n, positive, lam=lam, node_weights=ws)


def build_cc_bicluster_deletion(g: BipartiteGraph) -> CCInstance:
    """Bicluster-deletion weights: unit positive weight per edge, cross
    non-edges pinned to distance 1 (must separate), same-side pairs free."""
    n1 = g.n1
    positive = {(i, n1 + j): 1.0 for (i, j) in g.edges}
    fixed = [
        (i, n1 + j)
        for i in range(n1)
        for j in range(g.n2)
        if (i, j) not in g.edges
    ]
    return CCInstance(g.n, positive, explicit_negative={}, fixed_one=fixed)


def cc_objective(inst: CCInstance, clustering: Clustering) -> float:
    """Disagreement weight of a clustering: separated positive pairs plus
    together negative pairs.

    Accumulation order is fixed for reproducibility: positive pairs in
    lexicographic order, then explicit negative pairs in lexicographic
    order; the parametric negative term is accumulated per cluster in
    cluster-id order using lam/2 * ((sum w)^2 - sum w^2). A together pair
    in ``fixed_one`` yields infinity.
    """
    if clustering.n != inst.n:
        raise ValueError("clustering does not cover the instance")
    assign = clustering.assignment
    terms = [w for (i, j), w in inst.positive.items() if assign[i] != assign[j]]
    for (i, j) in sorted(inst.fixed_one):
        if assign[i] == assign[j]:
            return math.inf
    if inst.explicit_negative is not None:
        terms.extend(
            w for (i, j), w in inst.explicit_negative.items() if assign[i] == assign[j]
        )
    else:
        ws = inst.node_weights
        cluster_tot = [0.0] * clustering.k
        cluster_sq = [0.0] * clustering.k
        for v, a in enumerate(assign):
            cluster_tot[a] += ws[v]
            cluster_sq[a] += ws[v] * ws[v]
        terms.extend(
            inst.lam * 0.5 * (cluster_tot[c] * cluster_tot[c] - cluster_sq[c])
            for c in range(clustering.k)
        )
    return math.fsum(terms)

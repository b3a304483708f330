"""Clustering quality metrics, generic dataset loaders and writers,
synthetic planted-structure generators, and the sweep-record CSV schema."""

from __future__ import annotations

import csv
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graphs import BipartiteGraph, Clustering, Hypergraph, WeightedGraph


class FormatError(ValueError):
    """Malformed input file."""


# ---------------------------------------------------------------------------
# metrics

def ari(c1: Clustering, c2: Clustering) -> float:
    """Adjusted Rand index from the pair-counting contingency table.

    Degenerate inputs where the expected index equals the maximum index
    (e.g. both clusterings trivial) return 1.0 when the two agree pairwise
    and 0.0 otherwise; the paper leaves this case open and this convention
    is the documented one.
    """
    if c1.n != c2.n:
        raise ValueError("clusterings cover different node sets")
    n = c1.n
    table: dict[tuple[int, int], int] = {}
    for v in range(n):
        key = (c1.assignment[v], c2.assignment[v])
        table[key] = table.get(key, 0) + 1

    def comb2(x: int) -> int:
        return x * (x - 1) // 2

    rows: dict[int, int] = {}
    cols: dict[int, int] = {}
    for (a, b), cnt in table.items():
        rows[a] = rows.get(a, 0) + cnt
        cols[b] = cols.get(b, 0) + cnt
    index = sum(comb2(c) for c in table.values())
    sum_rows = sum(comb2(c) for c in rows.values())
    sum_cols = sum(comb2(c) for c in cols.values())
    total = comb2(n)
    if total == 0:
        return 1.0
    expected = sum_rows * sum_cols / total
    max_index = 0.5 * (sum_rows + sum_cols)
    if max_index == expected:
        return 1.0 if index == expected else 0.0
    return (index - expected) / (max_index - expected)


def best_f1_tracking(c: Clustering, target: Iterable[int]) -> float:
    """Best F1 score between any cluster and the target node set:
    max over clusters S of 2|S & T| / (|S| + |T|)."""
    t = frozenset(target)
    if not t:
        raise ValueError("target set must be nonempty")
    best = 0.0
    for cluster in c.clusters():
        s = frozenset(cluster)
        f1 = 2.0 * len(s & t) / (len(s) + len(t))
        best = max(best, f1)
    return best


# ---------------------------------------------------------------------------
# synthetic generators

def synth_planted_bipartite(
    k: int,
    sizes: Sequence[tuple[int, int]],
    p_in: float,
    p_out: float,
    seed: int = 0,
) -> tuple[BipartiteGraph, Clustering]:
    """Planted-block bipartite graph: cross-side pairs inside a block are
    edges with probability p_in, across blocks p_out. Ground truth groups
    each block's side-1 and side-2 nodes together."""
    if len(sizes) != k:
        raise ValueError("sizes must list one (n1, n2) pair per block")
    if not (0.0 <= p_in <= 1.0 and 0.0 <= p_out <= 1.0):
        raise ValueError("probabilities must lie in [0,1]")
    rng = random.Random(seed)
    block1: list[int] = []
    block2: list[int] = []
    for b, (a, c) in enumerate(sizes):
        block1.extend([b] * a)
        block2.extend([b] * c)
    n1, n2 = len(block1), len(block2)
    edges = []
    for i in range(n1):
        for j in range(n2):
            p = p_in if block1[i] == block2[j] else p_out
            if rng.random() < p:
                edges.append((i, j))
    truth = Clustering(block1 + block2)
    return BipartiteGraph(n1, n2, edges), truth


def synth_planted_hypergraph(
    k: int,
    sizes: Sequence[int],
    edges_per_block: int,
    edge_sizes: Sequence[int],
    noise_frac: float,
    seed: int = 0,
) -> tuple[Hypergraph, Clustering]:
    """Planted-block hypergraph: each block samples ``edges_per_block``
    hyperedges among its own nodes, except a noise_frac fraction sampled
    from the whole node set. Hyperedge sizes are drawn uniformly from
    ``edge_sizes`` (capped by the pool size)."""
    if len(sizes) != k:
        raise ValueError("sizes must list one count per block")
    if not 0.0 <= noise_frac <= 1.0:
        raise ValueError("noise_frac must lie in [0,1]")
    if not edge_sizes or min(edge_sizes) < 1:
        raise ValueError("edge_sizes must be positive")
    rng = random.Random(seed)
    labels: list[int] = []
    for b, s in enumerate(sizes):
        labels.extend([b] * s)
    n = len(labels)
    blocks = [[v for v in range(n) if labels[v] == b] for b in range(k)]
    edges: list[list[int]] = []
    for b in range(k):
        for _ in range(edges_per_block):
            pool = list(range(n)) if rng.random() < noise_frac else blocks[b]
            size = min(rng.choice(list(edge_sizes)), len(pool))
            edges.append(sorted(rng.sample(pool, size)))
    return Hypergraph(n, edges), Clustering(labels)


# ---------------------------------------------------------------------------
# text formats (1-based node ids on disk, 0-based in memory)

def _tokens(path: str) -> list[list[str]]:
    out = []
    with open(path) as fh:
        for line in fh:
            stripped = line.strip()
            if stripped and not stripped.startswith("#"):
                out.append(stripped.split())
    return out


def read_hypergraph(path: str) -> Hypergraph:
    """Format: first line ``n m``; then m lines of 1-based node ids, each
    optionally ending with ``w=<float>``."""
    lines = _tokens(path)
    if not lines or len(lines[0]) != 2:
        raise FormatError(f"{path}: expected header 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
    except ValueError as exc:
        raise FormatError(f"{path}: bad header") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"{path}: expected {m} hyperedge lines, got {len(lines) - 1}")
    edges, weights = [], []
    for row in lines[1:]:
        w = 1.0
        if row and row[-1].startswith("w="):
            try:
                w = float(row[-1][2:])
            except ValueError as exc:
                raise FormatError(f"{path}: bad weight token {row[-1]!r}") from exc
            row = row[:-1]
        try:
            nodes = [int(t) - 1 for t in row]
        except ValueError as exc:
            raise FormatError(f"{path}: bad node id in {row!r}") from exc
        if not nodes or any(v < 0 or v >= n for v in nodes):
            raise FormatError(f"{path}: node id out of range in {row!r}")
        edges.append(nodes)
        weights.append(w)
    return Hypergraph(n, edges, edge_weights=weights)


def write_hypergraph(path: str, h: Hypergraph) -> None:
    with open(path, "w") as fh:
        fh.write(f"{h.n} {h.m}\n")
        for fs, w in zip(h.edges, h.edge_weights):
            ids = " ".join(str(v + 1) for v in sorted(fs))
            if w == 1.0:
                fh.write(f"{ids}\n")
            else:
                fh.write(f"{ids} w={w:.9g}\n")


def read_bipartite(path: str) -> BipartiteGraph:
    """Format: first line ``n1 n2 m``; then m lines ``i j`` (1-based per side)."""
    lines = _tokens(path)
    if not lines or len(lines[0]) != 3:
        raise FormatError(f"{path}: expected header 'n1 n2 m'")
    try:
        n1, n2, m = (int(t) for t in lines[0])
    except ValueError as exc:
        raise FormatError(f"{path}: bad header") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"{path}: expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for row in lines[1:]:
        if len(row) != 2:
            raise FormatError(f"{path}: expected 'i j', got {row!r}")
        try:
            i, j = int(row[0]) - 1, int(row[1]) - 1
        except ValueError as exc:
            raise FormatError(f"{path}: bad edge {row!r}") from exc
        if not (0 <= i < n1 and 0 <= j < n2):
            raise FormatError(f"{path}: edge {row!r} out of range")
        edges.append((i, j))
    return BipartiteGraph(n1, n2, edges)


def write_bipartite(path: str, g: BipartiteGraph) -> None:
    with open(path, "w") as fh:
        fh.write(f"{g.n1} {g.n2} {len(g.edges)}\n")
        for (i, j) in sorted(g.edges):
            fh.write(f"{i + 1} {j + 1}\n")


def read_weighted_graph(path: str) -> WeightedGraph:
    """Format: first line ``n m``; then m lines ``i j [w]`` (1-based,
    weight defaults to 1)."""
    lines = _tokens(path)
    if not lines or len(lines[0]) != 2:
        raise FormatError(f"{path}: expected header 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
    except ValueError as exc:
        raise FormatError(f"{path}: bad header") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"{path}: expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for row in lines[1:]:
        if len(row) not in (2, 3):
            raise FormatError(f"{path}: expected 'i j [w]', got {row!r}")
        try:
            i, j = int(row[0]) - 1, int(row[1]) - 1
            w = float(row[2]) if len(row) == 3 else 1.0
        except ValueError as exc:
            raise FormatError(f"{path}: bad edge {row!r}") from exc
        edges.append((i, j, w))
    try:
        return WeightedGraph(n, edges)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def write_weighted_graph(path: str, g: WeightedGraph) -> None:
    with open(path, "w") as fh:
        fh.write(f"{g.n} {g.m}\n")
        for (i, j), w in g.edge_weights.items():
            if w == 1.0:
                fh.write(f"{i + 1} {j + 1}\n")
            else:
                fh.write(f"{i + 1} {j + 1} {w:.9g}\n")


def read_clustering(path: str, n: int | None = None) -> Clustering:
    """Format: one ``node_id cluster_id`` per line (1-based node, 0-based
    cluster). Every node must appear exactly once."""
    lines = _tokens(path)
    seen: dict[int, int] = {}
    for row in lines:
        if len(row) != 2:
            raise FormatError(f"{path}: expected 'node cluster', got {row!r}")
        try:
            v, c = int(row[0]) - 1, int(row[1])
        except ValueError as exc:
            raise FormatError(f"{path}: bad line {row!r}") from exc
        if v in seen:
            raise FormatError(f"{path}: node {v + 1} listed twice")
        seen[v] = c
    count = n if n is not None else (max(seen) + 1 if seen else 0)
    if sorted(seen) != list(range(count)):
        raise FormatError(f"{path}: does not cover nodes 1..{count}")
    return Clustering([seen[v] for v in range(count)])


def write_clustering(path: str, c: Clustering) -> None:
    with open(path, "w") as fh:
        for v, a in enumerate(c.assignment):
            fh.write(f"{v + 1} {a}\n")


def read_labels(path: str, n: int | None = None) -> Clustering:
    """Ground-truth labels, one ``node_id label`` per line; labels are
    arbitrary integers and are canonicalized."""
    return read_clustering(path, n)


# ---------------------------------------------------------------------------
# sweep records

CSV_COLUMNS = (
    "param_set", "mu1", "mu2", "beta", "lambda", "delta", "seed",
    "objective", "lp_bound", "ratio", "ari", "time_ms",
)


@dataclass
class SweepRecord:
    """One experiment cell. ``ratio`` is objective / lp_bound whenever a
    positive bound is present."""

    param_set: str
    mu1: float | None = None
    mu2: float | None = None
    beta: float | None = None
    lam: float | None = None
    delta: float | None = None
    seed: int = 0
    objective: float = 0.0
    lp_bound: float | None = None
    ratio: float | None = None
    ari: float | None = None
    time_ms: float | None = None

    def __post_init__(self):
        if self.ratio is None and self.lp_bound is not None and self.lp_bound > 0:
            self.ratio = self.objective / self.lp_bound


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def write_records(path: str, records: Iterable[SweepRecord]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow([
                r.param_set, _fmt(r.mu1), _fmt(r.mu2), _fmt(r.beta),
                _fmt(r.lam), _fmt(r.delta), _fmt(r.seed), _fmt(r.objective),
                _fmt(r.lp_bound), _fmt(r.ratio), _fmt(r.ari), _fmt(r.time_ms),
            ])


def read_records(path: str) -> list[SweepRecord]:
    def opt_float(s: str) -> float | None:
        return float(s) if s else None

    out = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != list(CSV_COLUMNS):
            raise FormatError(f"{path}: unexpected CSV header {reader.fieldnames}")
        for row in reader:
            out.append(SweepRecord(
                param_set=row["param_set"],
                mu1=opt_float(row["mu1"]),
                mu2=opt_float(row["mu2"]),
                beta=opt_float(row["beta"]),
                lam=opt_float(row["lambda"]),
                delta=opt_float(row["delta"]),
                seed=int(row["seed"]) if row["seed"] else 0,
                objective=float(row["objective"]),
                lp_bound=opt_float(row["lp_bound"]),
                ratio=opt_float(row["ratio"]),
                ari=opt_float(row["ari"]),
                time_ms=opt_float(row["time_ms"]),
            ))
    return out


def check_round_trip(path_a: str, path_b: str) -> bool:
    """Whitespace-insensitive equality of two text files."""
    def norm(p: str) -> list[list[str]]:
        return _tokens(p)

    return norm(path_a) == norm(path_b)

"""Hypergraph-to-graph reductions (clique and star expansions) and
triangle-motif hypergraph construction."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .graphs import Hypergraph, WeightedGraph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StarExpansion:
    """Bipartite star-expansion graph: original nodes 0..original_count-1
    plus one zero-weight auxiliary node per hyperedge."""

    graph: WeightedGraph
    original_count: int
    aux_of_edge: tuple[int, ...]

    def aux_nodes(self) -> range:
        return range(self.original_count, self.graph.n)


def clique_expand(h: Hypergraph) -> WeightedGraph:
    """Replace each hyperedge e by a clique with edge weight w_e/(|e|-1),
    summing weights across overlapping hyperedges. Node weights are copied
    from the hypergraph. Singleton hyperedges produce no pairs and are
    skipped (counted and logged)."""
    edges = []
    skipped = 0
    for fs, w in zip(h.edges, h.edge_weights):
        k = len(fs)
        if k < 2:
            skipped += 1
            continue
        share = w / (k - 1)
        nodes = sorted(fs)
        for a in range(k):
            for b in range(a + 1, k):
                edges.append((nodes[a], nodes[b], share))
    if skipped:
        log.warning("clique expansion skipped %d singleton hyperedges", skipped)
    return WeightedGraph(h.n, edges, node_weights=h.node_weights)


def star_expand(h: Hypergraph) -> StarExpansion:
    """Attach every node of each hyperedge to a fresh auxiliary node.

    The edge weight equals the hyperedge weight (1 by default) so that the
    minimum-cut placement of auxiliaries reproduces the linear cut penalty
    exactly. Auxiliary node weights are 0.
    """
    n = h.n
    aux = []
    edges = []
    for t, (fs, w) in enumerate(zip(h.edges, h.edge_weights)):
        aux_id = n + t
        aux.append(aux_id)
        for v in sorted(fs):
            edges.append((v, aux_id, w))
    node_weights = tuple(h.node_weights) + (0.0,) * len(h.edges)
    graph = WeightedGraph(n + len(h.edges), edges, node_weights=node_weights)
    return StarExpansion(graph=graph, original_count=n, aux_of_edge=tuple(aux))


def triangle_motif_hypergraph(g: WeightedGraph) -> Hypergraph:
    """One 3-node hyperedge per triangle of the graph, enumerated by
    sorted-neighborhood intersection with i < j < k. Edge weights of the
    input graph are ignored (treated as unit)."""
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    triangles = []
    for (i, j) in g.edge_weights:
        common = nbrs[i] & nbrs[j]
        for k in sorted(common):
            if k > j:
                triangles.append((i, j, k))
    triangles.sort()
    return Hypergraph(g.n, triangles)


def scale_to_volume(g: WeightedGraph, target: float) -> WeightedGraph:
    """Uniformly rescale edge weights so the total weighted degree (twice
    the total edge weight) equals ``target``."""
    if target <= 0:
        raise ValueError("target volume must be positive")
    current = 2.0 * sum(g.edge_weights.values())
    if current == 0:
        raise ValueError("cannot rescale a graph with no edges")
    factor = target / current
    return WeightedGraph(
        g.n,
        [(i, j, w * factor) for (i, j), w in g.edge_weights.items()],
        node_weights=g.node_weights,
    )

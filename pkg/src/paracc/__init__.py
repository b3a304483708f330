"""Parametric correlation clustering for hypergraphs and bipartite graphs:
objectives, LP-relaxation rounding with per-regime guarantees, expansions,
greedy heuristics, exact small-instance oracles, and an experiment harness.
"""

from .exact import (
    Matching,
    brute_force_bipartition,
    brute_force_optimum,
    hopcroft_karp,
    matching_clustering,
)
from .expansions import StarExpansion, clique_expand, star_expand, triangle_motif_hypergraph
from .graphs import (
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
from .evalio import (
    SweepRecord,
    ari,
    best_f1_tracking,
    read_records,
    synth_planted_bipartite,
    synth_planted_hypergraph,
    write_records,
)
from .louvain import hyperlam_louvain, lambda_louvain
from .lp import FractionalSolution, LPProblem, build_lp, lp_lower_bound_check, solve_cc_lp, solve_metric_lp
from .objectives import (
    ALL_OR_NOTHING,
    LINEAR,
    CutPenalty,
    capital_psi,
    hyper_ncut,
    hyperlam_objective,
    lemma1_check,
    natural_extension,
    ncut,
    pbcc_objective,
    psi,
)
from .rounding import (
    RoundingParams,
    RoundResult,
    Theorem31Report,
    delta_sweep,
    gen_round,
    pbcc_round,
    pivot,
    theorem31_check,
    theorem5_alpha,
    theorem5_delta,
    verify_case_bounds,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

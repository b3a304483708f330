"""Command-line interface exposing all pipelines.

Exit codes: 0 success, 2 malformed input or bad parameter, 3 infeasible or
size-limit error, 4 LP non-convergence when a certificate was required.
Every error prints one line ``paracc: error: <kind>: <message>`` on stderr.
Commands that write into an output directory also drop a deterministic
``manifest.json`` echoing the configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__, evalio, exact, louvain, lp as lpmod, objectives, rounding
from .evalio import FormatError
from .expansions import clique_expand, scale_to_volume, star_expand, triangle_motif_hypergraph
from .graphs import (
    SizeLimitError,
    build_cc_bicluster_deletion,
    build_cc_from_expansion,
    build_cc_from_pbcc,
    cc_objective,
)


class CertificateError(RuntimeError):
    """LP failed to converge but a certified bound was required."""


def _parse_grid(text: str) -> list[float]:
    """Grid syntax: 'a:b:s' (inclusive of endpoints within 1e-12),
    a comma list, or a single value."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise FormatError(f"grid must be start:end:step, got {text!r}")
        start, end, step = (float(t) for t in parts)
        if step <= 0:
            raise FormatError("grid step must be positive")
        vals = []
        t = 0
        while True:
            v = start + t * step
            if v > end + 1e-12:
                break
            vals.append(min(v, end))
            t += 1
        if not vals:
            raise FormatError(f"grid {text!r} is empty")
        return vals
    if "," in text:
        return [float(t) for t in text.split(",") if t]
    return [float(text)]


def _parse_int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t]


def _default_seed() -> int:
    return int(os.environ.get("PARACC_SEED", "0"))


def _write_manifest(outdir: Path, command: str, params: dict) -> None:
    manifest = {"tool": "paracc", "version": __version__, "command": command,
                "params": params}
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _outdir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _load_instance(args):
    """Shared instance construction for lp-solve and brute."""
    if args.bicluster:
        g = evalio.read_bipartite(args.input)
        return build_cc_bicluster_deletion(g), g
    if args.expansion:
        wg = evalio.read_weighted_graph(args.input)
        return build_cc_from_expansion(wg, args.lam, args.weights), wg
    g = evalio.read_bipartite(args.input)
    return build_cc_from_pbcc(g, args.mu1, args.mu2, args.beta), g


def _add_instance_flags(sp) -> None:
    sp.add_argument("--bicluster", action="store_true",
                    help="bicluster-deletion weights (pinned non-edges)")
    sp.add_argument("--expansion", action="store_true",
                    help="input is a weighted graph; parametric negatives lam*w_i*w_j")
    sp.add_argument("--mu1", type=float, default=0.0, help="side-1 repulsion (default 0)")
    sp.add_argument("--mu2", type=float, default=0.0, help="side-2 repulsion (default 0)")
    sp.add_argument("--beta", type=float, default=0.5, help="cross-pair parameter (default 0.5)")
    sp.add_argument("--lambda", dest="lam", type=float, default=0.0,
                    help="resolution parameter for --expansion (default 0)")
    sp.add_argument("--weights", choices=("unit", "degree"), default="degree",
                    help="node-weight mode for --expansion (default degree)")


def cmd_expand(args) -> int:
    out = _outdir(args)
    if args.mode in ("clique", "star"):
        h = evalio.read_hypergraph(args.input).with_node_weights(args.weights)
        if args.mode == "clique":
            g = clique_expand(h)
        else:
            g = star_expand(h).graph
        if args.normalize_volume is not None:
            g = scale_to_volume(g, args.normalize_volume)
        evalio.write_weighted_graph(str(out / "expanded.graph"), g)
    else:
        g = evalio.read_weighted_graph(args.input)
        h = triangle_motif_hypergraph(g)
        evalio.write_hypergraph(str(out / "motifs.hg"), h)
    _write_manifest(out, "expand", {
        "input": args.input, "mode": args.mode, "weights": args.weights,
        "normalize_volume": args.normalize_volume,
    })
    return 0


def cmd_eval(args) -> int:
    if args.objective == "hyperlam":
        h = evalio.read_hypergraph(args.graph)
        c = evalio.read_clustering(args.clustering, h.n)
        zeta = objectives.LINEAR if args.cut == "linear" else objectives.ALL_OR_NOTHING
        value = objectives.hyperlam_objective(h, c, args.lam, zeta, args.weights)
        params = {"lambda": args.lam, "cut": args.cut, "weights": args.weights}
    elif args.objective == "pbcc":
        g = evalio.read_bipartite(args.graph)
        c = evalio.read_clustering(args.clustering, g.n)
        value = objectives.pbcc_objective(g, c, args.mu1, args.mu2, args.beta)
        params = {"mu1": args.mu1, "mu2": args.mu2, "beta": args.beta}
    elif args.objective == "ncut":
        g = evalio.read_weighted_graph(args.graph)
        s = [v - 1 for v in _parse_int_list(args.node_set)]
        value = objectives.ncut(g, s)
        params = {"set": args.node_set}
    else:  # hncut
        h = evalio.read_hypergraph(args.graph)
        s = [v - 1 for v in _parse_int_list(args.node_set)]
        value = objectives.hyper_ncut(h, s, args.cut_kind)
        params = {"set": args.node_set, "cut_kind": args.cut_kind}
    if args.json:
        print(json.dumps({"objective": args.objective, "value": value, **params},
                         sort_keys=True))
    else:
        print(f"{value:.9g}")
    return 0


def _write_lp_outputs(out: Path, sol: lpmod.FractionalSolution) -> None:
    n = sol.x.shape[0]
    with open(out / "distances.txt", "w") as fh:
        for i in range(n):
            row = " ".join(f"{sol.x[i, j]:.9g}" for j in range(i + 1, n))
            fh.write(row + "\n")
    summary = {
        "objective": sol.objective_value,
        "lower_bound": sol.lower_bound,
        "violation": sol.feasibility_violation,
        "converged": sol.converged,
        "rounds": sol.rounds,
    }
    (out / "lp.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")


def cmd_lp_solve(args) -> int:
    inst, _ = _load_instance(args)
    sol = lpmod.solve_cc_lp(inst, tol_feas=args.tol, max_iters=args.max_iters)
    out = _outdir(args)
    _write_lp_outputs(out, sol)
    _write_manifest(out, "lp-solve", {
        "input": args.input, "bicluster": args.bicluster, "expansion": args.expansion,
        "mu1": args.mu1, "mu2": args.mu2, "beta": args.beta, "lambda": args.lam,
        "weights": args.weights, "tol": args.tol, "max_iters": args.max_iters,
    })
    if args.require_certificate and not sol.converged:
        raise CertificateError("LP did not converge; lower bound is not certified")
    return 0


def cmd_round(args) -> int:
    if args.mu is not None:
        args.mu1 = args.mu2 = args.mu
    g = evalio.read_bipartite(args.input)
    out = _outdir(args)
    if args.delta_grid is not None:
        inst = build_cc_from_pbcc(g, args.mu1, args.mu2, args.beta)
        sol = lpmod.solve_cc_lp(inst, tol_feas=args.tol, max_iters=args.max_iters)
        if not sol.converged:
            raise CertificateError("LP did not converge during delta sweep")
        grid = _parse_grid(args.delta_grid)
        seeds = _parse_int_list(args.seeds) if args.seeds else [args.seed]
        best, rows = rounding.delta_sweep(inst, sol, grid, seeds)
        with open(out / "sweep.csv", "w") as fh:
            fh.write("delta,seed,objective\n")
            for (d, s, obj) in rows:
                fh.write(f"{d:.9g},{s},{obj:.9g}\n")
        evalio.write_clustering(str(out / "clustering.txt"), best)
        result_json = {
            "objective": cc_objective(inst, best),
            "lp_bound": sol.lower_bound,
            "ratio": cc_objective(inst, best) / sol.lower_bound if sol.lower_bound > 0 else None,
        }
    else:
        mode = "auto" if args.auto else "fixed"
        res = rounding.pbcc_round(
            g, args.mu1, args.mu2, args.beta, mode=mode, delta=args.delta,
            seed=args.seed, tol_feas=args.tol, max_iters=args.max_iters,
        )
        if res.lp is not None and not res.lp.converged:
            raise CertificateError("LP did not converge; claimed factor not certified")
        evalio.write_clustering(str(out / "clustering.txt"), res.clustering)
        result_json = {
            "regime": res.regime,
            "delta": res.delta,
            "alpha_claimed": res.alpha_claimed,
            "objective": res.objective,
            "lp_bound": res.lp.lower_bound if res.lp else None,
            "notice": res.notice,
        }
        if args.alpha is not None and res.lp is not None and res.delta is not None:
            inst = build_cc_from_pbcc(g, args.mu1, args.mu2, args.beta)
            report = rounding.theorem31_check(inst, res.lp, res.delta, args.alpha)
            result_json["theorem31_alpha"] = args.alpha
            result_json["theorem31_passed"] = report.passed
    (out / "round.json").write_text(json.dumps(result_json, indent=2, sort_keys=True) + "\n")
    _write_manifest(out, "round", {
        "input": args.input, "mu1": args.mu1, "mu2": args.mu2, "beta": args.beta,
        "auto": args.auto, "delta": args.delta, "delta_grid": args.delta_grid,
        "seed": args.seed, "alpha": args.alpha,
    })
    return 0


def cmd_verify_bounds(args) -> int:
    report = rounding.verify_case_bounds(args.mu, args.beta, args.delta, args.alpha)
    payload = {
        "mu": args.mu, "beta": args.beta, "delta": args.delta, "alpha": args.alpha,
        "passed": report.passed,
        "cases": [
            {"name": c.name, "lhs": c.lhs, "f_delta": c.f_delta,
             "margin": c.margin, "applicable": c.applicable, "passed": c.passed}
            for c in report.cases
        ],
    }
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for c in report.cases:
            tag = "pass" if c.passed else "FAIL"
            extra = "" if c.applicable else " (not applicable)"
            print(f"{c.name:>14}: L={c.lhs:.9g} alpha*f={args.alpha * c.f_delta:.9g} "
                  f"margin={c.margin:.3g} {tag}{extra}")
        print("all cases pass" if report.passed else "BOUND VIOLATION")
    return 0 if report.passed else 1


def cmd_louvain(args) -> int:
    out = _outdir(args)
    if args.input_type == "hypergraph":
        h = evalio.read_hypergraph(args.input)
        lam = args.lam if args.lam is not None else args.lambda_scaled / max(h.volume(), 1)
        zeta = "linear_via_star" if args.cut == "linear" else "aon_via_clique"
        c = louvain.hyperlam_louvain(h, lam, zeta, args.weights, seed=args.seed)
    else:
        g = evalio.read_weighted_graph(args.input)
        lam = args.lam if args.lam is not None else args.lambda_scaled / max(
            2.0 * sum(g.edge_weights.values()), 1.0)
        c = louvain.lambda_louvain(g, lam, args.weights, seed=args.seed)
    evalio.write_clustering(str(out / "clustering.txt"), c)
    _write_manifest(out, "louvain", {
        "input": args.input, "input_type": args.input_type, "lambda": lam,
        "cut": args.cut, "weights": args.weights, "seed": args.seed,
    })
    return 0


def cmd_brute(args) -> int:
    inst, _ = _load_instance(args)
    c, value = exact.brute_force_optimum(inst, max_n=args.max_n)
    out = _outdir(args)
    evalio.write_clustering(str(out / "clustering.txt"), c)
    (out / "brute.json").write_text(json.dumps({"cost": value}, sort_keys=True) + "\n")
    _write_manifest(out, "brute", {
        "input": args.input, "max_n": args.max_n, "bicluster": args.bicluster,
        "expansion": args.expansion, "mu1": args.mu1, "mu2": args.mu2,
        "beta": args.beta, "lambda": args.lam, "weights": args.weights,
    })
    return 0


def cmd_matching(args) -> int:
    g = evalio.read_bipartite(args.input)
    m = exact.hopcroft_karp(g)
    c = exact.matching_clustering(g, m)
    out = _outdir(args)
    evalio.write_clustering(str(out / "clustering.txt"), c)
    with open(out / "matching.txt", "w") as fh:
        for (i, j) in m.pairs:
            fh.write(f"{i + 1} {j + 1}\n")
    (out / "matching.json").write_text(
        json.dumps({"size": len(m)}, sort_keys=True) + "\n")
    _write_manifest(out, "matching", {"input": args.input})
    return 0


def _sweep_cell(payload):
    """One (mu, beta) cell of a PBCC sweep; runs in a worker process."""
    (g, mu, beta, deltas, seeds, tol, max_iters, truth, timing) = payload
    t0 = time.perf_counter()
    inst = build_cc_from_pbcc(g, mu, mu, beta)
    sol = lpmod.solve_cc_lp(inst, tol_feas=tol, max_iters=max_iters)
    best, rows = rounding.delta_sweep(inst, sol, deltas, seeds)
    best_delta, best_seed, best_obj = min(rows, key=lambda r: (r[2], r[0], r[1]))
    elapsed = (time.perf_counter() - t0) * 1000.0
    record = evalio.SweepRecord(
        param_set=f"mu={mu:.9g},beta={beta:.9g}",
        mu1=mu, mu2=mu, beta=beta, delta=best_delta, seed=best_seed,
        objective=best_obj,
        lp_bound=sol.lower_bound if sol.converged else None,
        ari=evalio.ari(best, truth) if truth is not None else None,
        time_ms=elapsed if timing else None,
    )
    return record, sol.converged


def cmd_sweep(args) -> int:
    out = _outdir(args)
    seeds = _parse_int_list(args.seeds) if args.seeds else [args.seed]
    records = []
    if args.hyperlam:
        h = evalio.read_hypergraph(args.input)
        truth = evalio.read_labels(args.labels, h.n) if args.labels else None
        zeta = "linear_via_star" if args.cut == "linear" else "aon_via_clique"
        for lam in _parse_grid(args.lambda_grid):
            for seed in seeds:
                t0 = time.perf_counter()
                c = louvain.hyperlam_louvain(h, lam, zeta, args.weights, seed=seed)
                zeta_fn = objectives.LINEAR if args.cut == "linear" else objectives.ALL_OR_NOTHING
                obj = objectives.hyperlam_objective(h, c, lam, zeta_fn, args.weights)
                records.append(evalio.SweepRecord(
                    param_set=f"lambda={lam:.9g}",
                    lam=lam, seed=seed, objective=obj,
                    ari=evalio.ari(c, truth) if truth is not None else None,
                    time_ms=(time.perf_counter() - t0) * 1000.0 if args.timing else None,
                ))
    else:
        g = evalio.read_bipartite(args.input)
        truth = evalio.read_labels(args.labels, g.n) if args.labels else None
        deltas = _parse_grid(args.deltas)
        cells = [
            (g, mu, beta, deltas, seeds, args.tol, args.max_iters, truth, args.timing)
            for mu in _parse_grid(args.mu_grid)
            for beta in _parse_grid(args.beta_grid)
        ]
        jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
        if jobs > 1 and len(cells) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_sweep_cell, cells))
        else:
            results = [_sweep_cell(c) for c in cells]
        unconverged = [rec.param_set for rec, ok in results if not ok]
        records = [rec for rec, _ in results]
        if unconverged:
            evalio.write_records(str(out / "sweep.csv"), records)
            raise CertificateError(
                f"LP did not converge for cells: {', '.join(unconverged)}")
    evalio.write_records(str(out / "sweep.csv"), records)
    _write_manifest(out, "sweep", {
        "input": args.input, "hyperlam": args.hyperlam,
        "mu_grid": args.mu_grid, "beta_grid": args.beta_grid,
        "lambda_grid": args.lambda_grid, "deltas": args.deltas,
        "seeds": seeds, "cut": args.cut, "weights": args.weights,
        "labels": args.labels,
    })
    return 0


def cmd_synth(args) -> int:
    out = _outdir(args)
    if args.kind == "bipartite":
        sizes = [tuple(int(x) for x in pair.split("x")) for pair in args.sizes.split(",")]
        g, truth = evalio.synth_planted_bipartite(
            len(sizes), sizes, args.p_in, args.p_out, seed=args.seed)
        evalio.write_bipartite(str(out / "graph.bip"), g)
    else:
        sizes = [int(x) for x in args.sizes.split(",")]
        g, truth = evalio.synth_planted_hypergraph(
            len(sizes), sizes, args.edges_per_block,
            [int(x) for x in args.edge_sizes.split(",")],
            args.noise, seed=args.seed)
        evalio.write_hypergraph(str(out / "graph.hg"), g)
    with open(out / "labels.txt", "w") as fh:
        for v, a in enumerate(truth.assignment):
            fh.write(f"{v + 1} {a}\n")
    _write_manifest(out, "synth", {
        "kind": args.kind, "sizes": args.sizes, "p_in": getattr(args, "p_in", None),
        "p_out": getattr(args, "p_out", None), "noise": getattr(args, "noise", None),
        "edges_per_block": getattr(args, "edges_per_block", None),
        "edge_sizes": getattr(args, "edge_sizes", None), "seed": args.seed,
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paracc",
        description="Parametric correlation clustering for hypergraphs and bipartite graphs.",
    )
    parser.add_argument("--version", action="version", version=f"paracc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(
            name, formatter_class=argparse.ArgumentDefaultsHelpFormatter, **kwargs)

    sp = add_parser("expand", help="hypergraph expansions and motif hypergraphs")
    sp.add_argument("input", help="input graph or hypergraph file")
    sp.add_argument("--mode", choices=("clique", "star", "triangles"), required=True,
                    help="expansion or motif mode")
    sp.add_argument("--weights", choices=("unit", "degree"), default="unit",
                    help="node-weight mode stamped on the expansion (default unit)")
    sp.add_argument("--normalize-volume", type=float, default=None,
                    help="rescale edge weights to this total volume")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_expand)

    sp = add_parser("eval", help="evaluate an objective, print one number")
    sp.add_argument("--objective", choices=("hyperlam", "pbcc", "ncut", "hncut"),
                    required=True)
    sp.add_argument("--graph", required=True, help="input graph file")
    sp.add_argument("--clustering", help="clustering file (hyperlam/pbcc)")
    sp.add_argument("--set", dest="node_set", help="comma list of 1-based ids (ncut/hncut)")
    sp.add_argument("--lambda", dest="lam", type=float, default=0.0,
                    help="resolution parameter")
    sp.add_argument("--cut", choices=("aon", "linear"), default="aon",
                    help="hyperedge cut penalty")
    sp.add_argument("--cut-kind", choices=("boundary", "linear"), default="boundary",
                    help="two-way hypergraph cut kind")
    sp.add_argument("--weights", choices=("unit", "degree"), default="unit",
                    help="node-weight mode")
    sp.add_argument("--mu1", type=float, default=0.0, help="side-1 repulsion")
    sp.add_argument("--mu2", type=float, default=0.0, help="side-2 repulsion")
    sp.add_argument("--beta", type=float, default=0.5, help="cross-pair parameter")
    sp.add_argument("--json", action="store_true", help="JSON envelope with parameters")
    sp.set_defaults(func=cmd_eval)

    sp = add_parser("lp-solve", help="solve the metric LP relaxation")
    sp.add_argument("input", help="input graph file")
    _add_instance_flags(sp)
    sp.add_argument("--tol", type=float, default=lpmod.DEFAULT_TOL_FEAS,
                    help="max triangle violation at convergence")
    sp.add_argument("--max-iters", type=int, default=lpmod.DEFAULT_MAX_ITERS,
                    help="constraint-generation round limit")
    sp.add_argument("--require-certificate", action="store_true",
                    help="exit 4 when the solve does not converge")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_lp_solve)

    sp = add_parser("round", help="LP rounding for bipartite instances")
    sp.add_argument("input", help="bipartite graph file")
    sp.add_argument("--mu", type=float, default=None,
                    help="shorthand setting both same-side repulsions")
    sp.add_argument("--mu1", type=float, default=0.0, help="side-1 repulsion")
    sp.add_argument("--mu2", type=float, default=0.0, help="side-2 repulsion")
    sp.add_argument("--beta", type=float, default=0.5, help="cross-pair parameter")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--auto", action="store_true", help="pick delta by parameter regime")
    group.add_argument("--delta", type=float, help="fixed threshold")
    group.add_argument("--delta-grid", help="sweep grid start:end:step")
    sp.add_argument("--seed", type=int, default=_default_seed(),
                    help="pivot/generator seed (env PARACC_SEED)")
    sp.add_argument("--seeds", help="comma list of seeds for --delta-grid")
    sp.add_argument("--alpha", type=float, default=None,
                    help="also run the rounding-condition checker at this factor")
    sp.add_argument("--tol", type=float, default=lpmod.DEFAULT_TOL_FEAS,
                    help="max triangle violation at convergence")
    sp.add_argument("--max-iters", type=int, default=lpmod.DEFAULT_MAX_ITERS,
                    help="constraint-generation round limit")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_round)

    sp = add_parser("verify-bounds", help="check the nine case bounds")
    sp.add_argument("--mu", type=float, required=True, help="same-side repulsion")
    sp.add_argument("--beta", type=float, required=True, help="cross-pair parameter")
    sp.add_argument("--delta", type=float, required=True, help="rounding threshold")
    sp.add_argument("--alpha", type=float, required=True, help="claimed factor")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.set_defaults(func=cmd_verify_bounds)

    sp = add_parser("louvain", help="greedy agglomerative clustering")
    sp.add_argument("input", help="hypergraph or weighted graph file")
    sp.add_argument("--input-type", choices=("hypergraph", "graph"), default="hypergraph",
                    help="how to parse the input file")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--lambda", dest="lam", type=float, default=None,
                       help="absolute resolution parameter")
    group.add_argument("--lambda-scaled", type=float, default=None,
                       help="lambda = value / total volume")
    sp.add_argument("--cut", choices=("aon", "linear"), default="aon",
                    help="hyperedge cut penalty")
    sp.add_argument("--weights", choices=("unit", "degree"), default="degree")
    sp.add_argument("--seed", type=int, default=_default_seed(),
                    help="pivot/generator seed (env PARACC_SEED)")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_louvain)

    sp = add_parser("brute", help="exact optimum by partition enumeration")
    sp.add_argument("input", help="input graph file")
    _add_instance_flags(sp)
    sp.add_argument("--max-n", type=int, default=exact.MAX_BRUTE_NODES,
                    help="enumeration size limit")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_brute)

    sp = add_parser("matching", help="maximum bipartite matching clustering")
    sp.add_argument("input", help="bipartite graph file")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_matching)

    sp = add_parser("sweep", help="parameter sweep producing a records CSV")
    sp.add_argument("input", help="bipartite graph or hypergraph file")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--pbcc", action="store_true", help="bipartite LP sweep")
    mode.add_argument("--hyperlam", action="store_true", help="hypergraph louvain sweep")
    sp.add_argument("--mu", dest="mu_grid", default=argparse.SUPPRESS,
                    help="fixed mu (alias for --mu-grid with one value)")
    sp.add_argument("--mu-grid", default="0", help="mu grid (pbcc; default 0)")
    sp.add_argument("--beta-grid", default="0.5", help="beta grid (pbcc)")
    sp.add_argument("--deltas", default="0.05:0.95:0.05", help="rounding thresholds (pbcc)")
    sp.add_argument("--lambda-grid", default="0.01", help="lambda grid (hyperlam)")
    sp.add_argument("--cut", choices=("aon", "linear"), default="aon",
                    help="hyperedge cut penalty")
    sp.add_argument("--weights", choices=("unit", "degree"), default="degree")
    sp.add_argument("--labels", help="ground-truth labels for ARI")
    sp.add_argument("--seed", type=int, default=_default_seed(),
                    help="pivot/generator seed (env PARACC_SEED)")
    sp.add_argument("--seeds", help="comma list of pivot seeds")
    sp.add_argument("--jobs", type=int, default=0, help="worker processes (default: cores)")
    sp.add_argument("--timing", action="store_true",
                    help="record wall time (makes output nondeterministic)")
    sp.add_argument("--tol", type=float, default=lpmod.DEFAULT_TOL_FEAS,
                    help="max triangle violation at convergence")
    sp.add_argument("--max-iters", type=int, default=lpmod.DEFAULT_MAX_ITERS,
                    help="constraint-generation round limit")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_sweep)

    sp = add_parser("synth", help="planted synthetic instances")
    sp.add_argument("kind", choices=("bipartite", "hypergraph"), help="instance family")
    sp.add_argument("--sizes", required=True,
                    help="bipartite: 'a1xb1,a2xb2,...'; hypergraph: 'n1,n2,...'")
    sp.add_argument("--p-in", type=float, default=0.9, help="within-block edge probability")
    sp.add_argument("--p-out", type=float, default=0.05, help="cross-block edge probability")
    sp.add_argument("--edges-per-block", type=int, default=20, help="hyperedges per block")
    sp.add_argument("--edge-sizes", default="2,3,4", help="hyperedge sizes to sample")
    sp.add_argument("--noise", type=float, default=0.0, help="fraction sampled graph-wide")
    sp.add_argument("--seed", type=int, default=_default_seed(),
                    help="pivot/generator seed (env PARACC_SEED)")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"paracc: error: parse: {exc}", file=sys.stderr)
        return 2
    except SizeLimitError as exc:
        print(f"paracc: error: size-limit: {exc}", file=sys.stderr)
        return 3
    except CertificateError as exc:
        print(f"paracc: error: lp-certificate: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as exc:
        print(f"paracc: error: parse: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Render experiment-sweep CSVs as publication-style line figures.

Reads one or more sweep CSVs (the clustering harness schema: columns such
as mu1, beta, lambda, objective, lp_bound, ratio, ari) and draws one line
per group value, e.g. a-posteriori ratio against beta with one line per
dataset:

    python plots/render.py --csv cities.csv --csv zoo.csv \
        --x beta --y ratio --group dataset --out fig.svg

When several CSVs are given (or ``--group dataset`` is requested and no
such column exists) each file contributes a synthetic ``dataset`` column
holding its stem. Output format follows the file extension; vector formats
(svg, pdf) are the intended targets. Rendering is deterministic: no
timestamps or per-run hashes are embedded.

Exit codes: 0 on success, 1 on any error (missing column, empty CSV,
unreadable file); the offending column or file is named on stderr.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


class PlotError(Exception):
    pass


@dataclass
class PlotSpec:
    csv_paths: list[str]
    x: str
    y: str
    group: str | None = None
    out: str = "figure.svg"
    xlabel: str | None = None
    ylabel: str | None = None
    logx: bool = False
    logy: bool = False
    title: str | None = None
    rows: list[dict] = field(default_factory=list, repr=False)


def load_rows(spec: PlotSpec) -> list[dict]:
    """Read and pool all CSVs, tagging each row with its source dataset.
    Validates that the x, y, and group columns exist."""
    rows: list[dict] = []
    for path in spec.csv_paths:
        p = Path(path)
        if not p.exists():
            raise PlotError(f"csv not found: {path}")
        with open(p, newline="") as fh:
            reader = csv.DictReader(fh)
            header = reader.fieldnames or []
            for col in (spec.x, spec.y):
                if col not in header:
                    raise PlotError(f"column {col!r} missing from {path}")
            if spec.group and spec.group != "dataset" and spec.group not in header:
                raise PlotError(f"column {spec.group!r} missing from {path}")
            for raw in reader:
                row = dict(raw)
                row.setdefault("dataset", p.stem)
                rows.append(row)
    if not rows:
        raise PlotError("no data rows in input CSVs")
    return rows


def _as_float(row: dict, col: str) -> float | None:
    val = row.get(col, "")
    if val is None or val == "":
        return None
    try:
        return float(val)
    except ValueError:
        return None


def render(spec: PlotSpec) -> str:
    """Draw the figure described by the spec and write it to spec.out.
    Returns the output path. Nothing is written when an error occurs."""
    rows = spec.rows or load_rows(spec)

    groups: dict[str, list[tuple[float, float]]] = {}
    for row in rows:
        x = _as_float(row, spec.x)
        y = _as_float(row, spec.y)
        if x is None or y is None:
            continue  # blank optional fields (e.g. missing lp bound)
        key = row.get(spec.group, "") if spec.group else "all"
        groups.setdefault(str(key), []).append((x, y))
    if not any(groups.values()):
        raise PlotError(
            f"no plottable points for x={spec.x!r}, y={spec.y!r}")

    plt.rcParams["svg.hashsalt"] = "paracc-plots"
    fig, ax = plt.subplots(figsize=(5.2, 3.4))
    markers = ["o", "s", "^", "d", "v", "*", "P", "X"]
    for idx, key in enumerate(sorted(groups)):
        pts = sorted(groups[key])
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        ax.plot(xs, ys, marker=markers[idx % len(markers)], markersize=4,
                linewidth=1.4, label=key)
    ax.set_xlabel(spec.xlabel or spec.x)
    ax.set_ylabel(spec.ylabel or spec.y)
    if spec.logx:
        ax.set_xscale("log")
    if spec.logy:
        ax.set_yscale("log")
    if spec.title:
        ax.set_title(spec.title)
    if spec.group and len(groups) > 1:
        ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    out = Path(spec.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    fmt = out.suffix.lstrip(".").lower() or "svg"
    metadata = {"Date": None} if fmt == "svg" else None
    fig.savefig(out, format=fmt, metadata=metadata)
    plt.close(fig)
    return str(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Render sweep CSVs as line figures.")
    parser.add_argument("--csv", action="append", required=True,
                        help="input CSV (repeatable; one line group per file)")
    parser.add_argument("--x", required=True, help="x-axis column")
    parser.add_argument("--y", required=True, help="y-axis column")
    parser.add_argument("--group", default=None,
                        help="group-by column ('dataset' = source file stem)")
    parser.add_argument("--out", required=True, help="output image (svg/pdf/png)")
    parser.add_argument("--xlabel", default=None)
    parser.add_argument("--ylabel", default=None)
    parser.add_argument("--title", default=None)
    parser.add_argument("--logx", action="store_true")
    parser.add_argument("--logy", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = PlotSpec(
        csv_paths=args.csv, x=args.x, y=args.y, group=args.group,
        out=args.out, xlabel=args.xlabel, ylabel=args.ylabel,
        logx=args.logx, logy=args.logy, title=args.title,
    )
    try:
        path = render(spec)
    except PlotError as exc:
        print(f"render: error: {exc}", file=sys.stderr)
        return 1
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())

import csv
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from render import PlotError, PlotSpec, load_rows, main, render  # noqa: E402

COLUMNS = ["param_set", "mu1", "mu2", "beta", "lambda", "delta", "seed",
           "objective", "lp_bound", "ratio", "ari", "time_ms"]


def write_sweep_csv(path, betas, ratios):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(COLUMNS)
        for b, r in zip(betas, ratios):
            w.writerow([f"mu=0,beta={b}", 0, 0, b, "", 0.5, 0,
                        2 * r, 2.0, r, "", ""])


def test_ratio_vs_beta_multi_dataset(tmp_path):
    paths = []
    for k in range(5):
        p = tmp_path / f"dataset{k}.csv"
        write_sweep_csv(p, [0.1 * t for t in range(1, 10)],
                        [1.0 + 0.1 * k + 0.05 * t for t in range(1, 10)])
        paths.append(str(p))
    out = tmp_path / "fig.svg"
    spec = PlotSpec(csv_paths=paths, x="beta", y="ratio", group="dataset",
                    out=str(out))
    assert render(spec) == str(out)
    data = out.read_bytes()
    assert len(data) > 0
    assert b"<svg" in data
    # five legend entries, one per dataset
    for k in range(5):
        assert f"dataset{k}".encode() in data


def test_empty_csv_errors_without_file(tmp_path):
    p = tmp_path / "empty.csv"
    with open(p, "w", newline="") as fh:
        csv.writer(fh).writerow(COLUMNS)
    out = tmp_path / "fig.svg"
    rc = main(["--csv", str(p), "--x", "beta", "--y", "ratio", "--out", str(out)])
    assert rc == 1
    assert not out.exists()


def test_single_row_plots(tmp_path):
    p = tmp_path / "one.csv"
    write_sweep_csv(p, [0.5], [1.25])
    out = tmp_path / "point.svg"
    rc = main(["--csv", str(p), "--x", "beta", "--y", "ratio", "--out", str(out)])
    assert rc == 0
    assert out.stat().st_size > 0


def test_missing_column_named(tmp_path, capsys):
    p = tmp_path / "s.csv"
    write_sweep_csv(p, [0.5], [1.0])
    rc = main(["--csv", str(p), "--x", "beta", "--y", "nonsense",
               "--out", str(tmp_path / "f.svg")])
    assert rc == 1
    assert "nonsense" in capsys.readouterr().err


def test_missing_file_errors(tmp_path):
    rc = main(["--csv", str(tmp_path / "nope.csv"), "--x", "a", "--y", "b",
               "--out", str(tmp_path / "f.svg")])
    assert rc == 1


def test_rerender_is_deterministic(tmp_path):
    p = tmp_path / "s.csv"
    write_sweep_csv(p, [0.2, 0.4, 0.6], [1.0, 1.5, 1.2])
    out = tmp_path / "fig.svg"
    argv = ["--csv", str(p), "--x", "beta", "--y", "ratio", "--out", str(out)]
    assert main(argv) == 0
    first = out.read_bytes()
    assert main(argv) == 0
    assert out.read_bytes() == first


def test_csv_not_mutated(tmp_path):
    p = tmp_path / "s.csv"
    write_sweep_csv(p, [0.2, 0.4], [1.0, 1.1])
    before = p.read_bytes()
    main(["--csv", str(p), "--x", "beta", "--y", "ratio",
          "--out", str(tmp_path / "f.svg")])
    assert p.read_bytes() == before


def test_group_by_existing_column(tmp_path):
    p = tmp_path / "s.csv"
    with open(p, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(COLUMNS)
        for mu in (0.0, 0.1):
            for b in (0.5, 0.6, 0.7):
                w.writerow([f"mu={mu}", mu, mu, b, "", 0.5, 0, 1.0, 1.0,
                            1.0 + mu + b, "", ""])
    out = tmp_path / "fig.pdf"
    rc = main(["--csv", str(p), "--x", "beta", "--y", "ratio",
               "--group", "mu1", "--out", str(out)])
    assert rc == 0
    assert out.read_bytes().startswith(b"%PDF")


def test_blank_optional_fields_skipped(tmp_path):
    p = tmp_path / "s.csv"
    with open(p, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(COLUMNS)
        w.writerow(["a", 0, 0, 0.5, "", 0.5, 0, 1.0, "", "", "", ""])
        w.writerow(["a", 0, 0, 0.6, "", 0.5, 0, 1.0, 2.0, 1.5, "", ""])
    rows = load_rows(PlotSpec(csv_paths=[str(p)], x="beta", y="ratio"))
    assert len(rows) == 2
    out = tmp_path / "f.svg"
    assert main(["--csv", str(p), "--x", "beta", "--y", "ratio",
                 "--out", str(out)]) == 0


def test_all_blank_y_errors(tmp_path):
    p = tmp_path / "s.csv"
    with open(p, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(COLUMNS)
        w.writerow(["a", 0, 0, 0.5, "", 0.5, 0, 1.0, "", "", "", ""])
    with pytest.raises(PlotError):
        render(PlotSpec(csv_paths=[str(p)], x="beta", y="ratio",
                        out=str(tmp_path / "f.svg")))

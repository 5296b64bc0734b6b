"""Command-line surface: paper-style tables, CDF/quantile grids, rate
reports, and the density/probability-plot figure data.

Every command writes CSV (comma-separated, '.' decimal, header row,
UTF-8, LF) at full float precision plus a JSON manifest sidecar named
<output>.manifest.json recording the command line, seed, node counts,
tolerances, wall time, and the produced files.  The figure-bearing
commands also render PNG files next to the CSV output.

Exit codes: 0 success, 2 usage error, 3 accuracy failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from scipy.interpolate import PchipInterpolator  # noqa: E402

from . import __version__  # noqa: E402
from ._errors import AccuracyError  # noqa: E402
from .ensembles import SampleConfig, largest_eigenvalue_sample, mc_cdf, mc_density  # noqa: E402
from .fredholm import QUANTILE_BRACKET, finite_cdf, tw_cdf, tw_quantile  # noqa: E402
from .lg import rate_scan  # noqa: E402
from .specfun import CenteringSpec, centering  # noqa: E402

ALPHAS = (0.01, 0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99)
TABLE_ROWS = {
    1: (2, 5, 10, 25, 50, 75, 100, 200, 500),
    2: (2, 5, 10, 25, 50),
    3: (2, 5, 10, 25, 50, 75, 100, 200, 500),
    4: (2, 3, 4, 5, 10, 25, 50, 75, 100, 200, 500),
}
SELF_CONV_TOL = 1e-7
MAX_REPS = 10**8

EXIT_USAGE = 2
EXIT_ACCURACY = 3


def _fmt(x):
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    return str(x)


def _write_csv(path: Path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def _write_manifest(primary: Path, args, outputs, extra, t_start):
    manifest = {
        "command": args.command,
        "argv": sys.argv[1:],
        "version": __version__,
        "outputs": [str(p) for p in outputs],
        "wall_time_s": time.time() - t_start,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
    }
    manifest.update(extra)
    path = primary.with_suffix(primary.suffix + ".manifest.json")
    path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return path


def _parse_grid(text):
    if ":" in text:
        start, stop, step = (float(v) for v in text.split(":"))
        n = int(round((stop - start) / step)) + 1
        return [start + i * step for i in range(n)]
    return [float(v) for v in text.split(",")]


def _parse_int_list(text):
    return [int(v) for v in text.split(",")]


def _cmd_table(args, t0):
    table = args.table
    out = Path(args.out or f"table{table}.csv")
    rows_spec = TABLE_ROWS[table]
    extra = {"alphas": list(ALPHAS)}
    rows = []
    if table in (1, 2):
        spec = CenteringSpec("GUE", "theorem" if table == 1 else "averaged")
        quantiles = [tw_quantile(2, a) for a in ALPHAS]
        extra.update({"nodes": args.nodes, "tolerances": {"self_convergence": SELF_CONV_TOL}})
        for N in rows_spec:
            mu, _ = centering(spec, N)
            cells = []
            for q in quantiles:
                res = finite_cdf("GUE", N, spec, q, m=args.nodes)
                if res.convergence >= SELF_CONV_TOL:
                    print(
                        f"table {table}: determinant at N={N} failed self-convergence "
                        f"({res.convergence:.2e} >= {SELF_CONV_TOL})",
                        file=sys.stderr,
                    )
                    return EXIT_ACCURACY
                cells.append(res.value)
            rows.append([N, mu] + cells)
        _write_csv(out, ["N", "mu_N"] + [str(a) for a in ALPHAS], rows)
    else:
        if table == 3:
            spec = CenteringSpec("GOE", "theorem")
        else:
            spec = CenteringSpec("GOE", "tuned", gamma=args.gamma, c=args.c)
        extra.update({"reps": args.reps, "seed": args.seed, "model": "tridiagonal"})
        for n in rows_spec:
            cfg = SampleConfig("GOE", n, reps=args.reps, seed=args.seed)
            est = mc_cdf(cfg, spec, ALPHAS)
            rows.append([n] + list(est.p_hat))
        _write_csv(out, ["N_plus_1"] + [str(a) for a in ALPHAS], rows)
    _write_manifest(out, args, [out], extra, t0)
    return 0


def _cmd_tw(args, t0):
    out = Path(args.out or f"tw_beta{args.beta}.csv")
    lo, hi = QUANTILE_BRACKET
    if args.s0 is not None:
        grid = _parse_grid(args.s0)
        if any(s < lo or s > hi for s in grid):
            print(f"tw: s grid must lie within [{lo}, {hi}]", file=sys.stderr)
            return EXIT_USAGE
        rows = [[s, tw_cdf(args.beta, s)] for s in grid]
        header = ["s", f"F{args.beta}"]
    else:
        grid = _parse_grid(args.alpha)
        if any(a < 1e-6 or a > 1 - 1e-6 for a in grid):
            print("tw: alpha grid must lie within [1e-6, 1 - 1e-6]", file=sys.stderr)
            return EXIT_USAGE
        rows = [[a, tw_quantile(args.beta, a)] for a in grid]
        header = ["alpha", "quantile"]
    _write_csv(out, header, rows)
    _write_manifest(out, args, [out], {"beta": args.beta}, t0)
    return 0


_LG_GRID = np.arange(-6.0, 10.0 + 1e-9, 0.5)


def _cmd_rates(args, t0):
    out = Path(args.out or "rates.csv")
    ensemble = "GUE" if args.beta == 2 else "GOE"
    n_list = _parse_int_list(args.N) if args.N else []
    s_grid = _parse_grid(args.s0) if args.s0 else []
    if ensemble == "GOE" and any((n - 1) % 2 for n in n_list):
        print("rates: GOE requires N - 1 even", file=sys.stderr)
        return EXIT_USAGE
    spec = CenteringSpec(ensemble, args.centering, gamma=args.gamma, c=args.c)
    weight = 1.0 if ensemble == "GUE" else 0.5
    beta = args.beta
    rows = []
    for N in n_list:
        for s in s_grid:
            limit = tw_cdf(beta, s)
            res = finite_cdf(ensemble, N, spec, s, m=args.nodes)
            raw = abs(res.value - limit)
            rows.append(
                ["cdf", N, s, raw,
                 N ** (2.0 / 3.0) * np.exp(weight * s) * raw,
                 N ** (1.0 / 3.0) * np.exp(weight * s) * raw]
            )
    if n_list:
        for row, row3 in zip(rate_scan(n_list, _LG_GRID), rate_scan(n_list, _LG_GRID, exponent=1.0 / 3.0)):
            rows.append(["lg_wave", row.N, "", "", row.wave_err, row3.wave_err])
            rows.append(["lg_deriv", row.N, "", "", row.deriv_err, row3.deriv_err])
    header = ["kind", "N", "s", "raw_error", "scaled_error", "scaled_error_third"]
    _write_csv(out, header, rows)
    outputs = [out]
    if n_list and s_grid:
        fig_path = out.with_suffix(".png")
        fig, ax = plt.subplots(figsize=(6, 4.5))
        for s in s_grid:
            vals = [r[4] for r in rows if r[0] == "cdf" and r[2] == s]
            ax.loglog(n_list, vals, "o-", label=f"s = {s:g}")
        ax.set_xlabel("N")
        ax.set_ylabel(r"$N^{2/3} e^{ws} |F_N - F_\beta|$")
        ax.set_title(f"{ensemble} edge-law convergence (scaled)")
        ax.legend(fontsize=8)
        fig.tight_layout()
        fig.savefig(fig_path, dpi=150)
        plt.close(fig)
        outputs.append(fig_path)
    _write_manifest(out, args, outputs, {"ensemble": ensemble, "nodes": args.nodes}, t0)
    return 0


def _f1_quantile_interpolant():
    grid = np.arange(-7.0, 4.5 + 1e-9, 0.25)
    vals = np.asarray([tw_cdf(1, s) for s in grid])
    keep = np.concatenate(([True], np.diff(vals) > 0))
    return PchipInterpolator(vals[keep], grid[keep])


def _cmd_figure1(args, t0):
    stem = Path(args.out or "figure1")
    reps = args.reps
    cfg = SampleConfig("GOE", 2, reps=reps, seed=args.seed)
    spec = CenteringSpec("GOE", "tuned", gamma=args.gamma, c=args.c)
    hist = mc_density(cfg, spec, args.bins)
    centers = 0.5 * (hist.edges[:-1] + hist.edges[1:])

    # f1 by central differences of the CDF
    f1_grid = np.arange(-10.0, 6.0 + 1e-9, 0.25)
    h = 5e-4
    f1_vals = np.asarray([(tw_cdf(1, s + h) - tw_cdf(1, s - h)) / (2.0 * h) for s in f1_grid])

    density_csv = stem.parent / (stem.name + "_density.csv")
    rows = [["hist", s, v] for s, v in zip(centers, hist.heights)]
    rows += [["f1", s, v] for s, v in zip(f1_grid, f1_vals)]
    for a in (0.01, 0.95, 0.99):
        rows.append(["quantile_marker", tw_quantile(1, a), a])
    _write_csv(density_csv, ["kind", "s", "value"], rows)

    # probability plot: F1 quantiles vs order statistics, subsampled
    mu, tau = centering(spec, cfg.n - 1)
    samples = np.sort((largest_eigenvalue_sample(cfg) - mu) / tau)
    take = min(10000, reps)
    idx = (np.arange(take) * (reps / take) + (reps / take) / 2.0).astype(int)
    probs = (idx + 0.5) / reps
    quant = _f1_quantile_interpolant()(probs)
    pplot_csv = stem.parent / (stem.name + "_pplot.csv")
    _write_csv(pplot_csv, ["f1_quantile", "order_statistic"], list(zip(quant, samples[idx])))

    fig_path = stem.parent / (stem.name + ".png")
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.2))
    ax1.stairs(hist.heights, hist.edges, fill=True, alpha=0.4, label="rescaled samples")
    ax1.plot(f1_grid, f1_vals, "k-", lw=1.2, label=r"$f_1$")
    ax1.set_xlim(-6, 4)
    ax1.set_xlabel("s")
    ax1.set_ylabel("density")
    ax1.legend(fontsize=8)
    ax2.plot(quant, samples[idx], ".", ms=2)
    lims = (quant[0], quant[-1])
    ax2.plot(lims, lims, "k--", lw=0.8)
    for a in (0.01, 0.95, 0.99):
        ax2.axvline(tw_quantile(1, a), color="gray", lw=0.6)
    ax2.set_xlabel(r"$F_1$ quantile")
    ax2.set_ylabel("ordered sample")
    fig.tight_layout()
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)

    _write_manifest(
        density_csv,
        args,
        [density_csv, pplot_csv, fig_path],
        {"reps": reps, "seed": args.seed, "bins": args.bins},
        t0,
    )
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gaussedge",
        description="Finite-N Gaussian-ensemble edge laws, Tracy-Widom limits, and convergence-rate reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="reproduce one of the four reference tables")
    p_table.add_argument("--table", type=int, choices=(1, 2, 3, 4), required=True)
    p_table.add_argument("--nodes", type=int, default=160, help="Nystrom nodes for determinant tables")
    p_table.add_argument("--reps", type=int, default=10**5, help="Monte Carlo replications (tables 3-4)")
    p_table.add_argument("--seed", type=int, default=20200808)
    p_table.add_argument("--gamma", type=float, default=0.2, help="tuned-centering shift (table 4)")
    p_table.add_argument("--c", type=float, default=1.0, help="tuned-centering scale offset (table 4)")
    p_table.add_argument("--out", type=str, default=None)

    p_tw = sub.add_parser("tw", help="Tracy-Widom CDF values or quantiles")
    p_tw.add_argument("--beta", type=int, choices=(1, 2), required=True)
    group = p_tw.add_mutually_exclusive_group(required=True)
    group.add_argument("--s0", type=str, help="comma list or start:stop:step grid of s values")
    group.add_argument("--alpha", type=str, help="comma list or start:stop:step grid of probabilities")
    p_tw.add_argument("--nodes", type=int, default=None, help="unused; nodes are chosen adaptively")
    p_tw.add_argument("--out", type=str, default=None)

    p_rates = sub.add_parser("rates", help="finite-N to limit convergence-rate report")
    p_rates.add_argument("--beta", type=int, choices=(1, 2), required=True, help="2 = GUE, 1 = GOE")
    p_rates.add_argument("--N", type=str, default="", help="comma list of degrees")
    p_rates.add_argument("--s0", type=str, default="", help="comma list or start:stop:step of s values")
    p_rates.add_argument("--centering", type=str, choices=("theorem", "averaged", "tuned"), default="theorem")
    p_rates.add_argument("--gamma", type=float, default=0.2)
    p_rates.add_argument("--c", type=float, default=1.0)
    p_rates.add_argument("--nodes", type=int, default=None)
    p_rates.add_argument("--out", type=str, default=None)

    p_fig = sub.add_parser("figure1", help="density and probability-plot data for the 2x2 GOE edge law")
    p_fig.add_argument("--reps", type=int, default=10**6)
    p_fig.add_argument("--seed", type=int, default=20200808)
    p_fig.add_argument("--bins", type=int, default=40)
    p_fig.add_argument("--gamma", type=float, default=0.2)
    p_fig.add_argument("--c", type=float, default=1.0)
    p_fig.add_argument("--out", type=str, default=None, help="output stem for the three files")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    t0 = time.time()
    if getattr(args, "reps", 0) and args.reps > MAX_REPS:
        parser.error(f"--reps must be <= {MAX_REPS}")
    if args.command == "figure1" and args.reps > 10**7:
        parser.error("figure1: --reps must be <= 1e7")
    try:
        if args.command == "table":
            return _cmd_table(args, t0)
        if args.command == "tw":
            return _cmd_tw(args, t0)
        if args.command == "rates":
            return _cmd_rates(args, t0)
        return _cmd_figure1(args, t0)
    except AccuracyError as exc:
        print(f"accuracy failure: {exc}", file=sys.stderr)
        return EXIT_ACCURACY
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: compute single points, sweep grids, emit
figure datasets, and run the acceptance battery.

Exit codes: 0 success, 2 usage error (argparse), 3 domain error,
4 sweep rows failed, 5 figure output error, 1 failed verification.

All numeric output carries 12 significant digits, entropies in nats.
Sweeps run on a thread pool capped by the CVW_THREADS environment
variable; rows are emitted in deterministic lexicographic order over
(p, lambda, mu) regardless of completion order.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import acceptance, bounds, exact, gaussian, nongauss, ppt
from .states import WernerParams, choose_cutoff

NUM_FMT = "%.12g"


def _fmt(x):
    if isinstance(x, float):
        return NUM_FMT % x
    return str(x)


def _round12(obj):
    if isinstance(obj, float):
        return float(NUM_FMT % obj)
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def report_json(measure, inputs, results, cutoff, error_budget, wall_time):
    doc = {
        "measure": measure,
        "inputs": inputs,
        "results": results,
        "cutoff": cutoff,
        "error_budget": error_budget,
        "units": "nats",
        "wall_time_s": wall_time,
    }
    return json.dumps(_round12(doc), indent=2, sort_keys=True)


def _require(opts, measure, *keys):
    missing = [k for k in keys if opts.get(k) is None]
    if missing:
        raise ValueError(f"measure '{measure}' needs --{' --'.join(missing)}")
    return [opts[k] for k in keys]


# ---------------------------------------------------------------------------
# measures: each returns (results, cutoff, error_budget)
# ---------------------------------------------------------------------------


def _m_discord0(opts):
    p, lam = _require(opts, "discord0", "p", "lam")
    rep = exact.discord_report(p, lam)
    results = {
        "discord": rep.discord,
        "entropy_global": rep.entropy_global,
        "entropy_reduced": rep.entropy_reduced,
        "eig_large": rep.eig_large,
        "eig_small": rep.eig_small,
    }
    return results, None, {"closed_form": 0.0}


def _m_gaussian_discord(opts):
    p, lam = _require(opts, "gaussian-discord", "p", "lam")
    eps_int = opts.get("eps_int") or 1e-7
    res = gaussian.gaussian_discord(p, lam, eps_int=eps_int)
    d = exact.discord(p, lam)
    results = {
        "gaussian_discord": res.value,
        "conditional_entropy_min": res.conditional_entropy,
        "t_opt": res.povm.t,
        "phi_opt": res.povm.phi,
        "discord": d,
        "gap": res.value - d,
    }
    return results, None, {"eps_int": eps_int, "evaluations": float(res.evaluations)}


def _m_delta0(opts):
    p, lam = _require(opts, "delta0", "p", "lam")
    nu = nongauss.symplectic_eigenvalue(p, lam)
    results = {
        "delta0": nongauss.nongaussianity(p, lam),
        "symplectic_eigenvalue": nu,
        "gaussian_reference_entropy": nongauss.gaussian_state_entropy(nu),
    }
    return results, None, {"closed_form": 0.0}


def _m_gap(opts):
    p, lam = _require(opts, "gap", "p", "lam")
    eps_int = opts.get("eps_int") or 1e-7
    rep = nongauss.discord_gap(p, lam, eps_int=eps_int)
    results = {
        "delta0": rep.delta0,
        "gap": rep.gap,
        "gap_normalized": rep.gap_normalized,
        "ratio_low_squeezing": rep.ratio_low_squeezing,
        "delta0_approx": rep.delta0_approx,
        "gap_approx": rep.gap_approx,
    }
    return results, None, {"eps_int": eps_int}


def _m_bounds(opts):
    p, lam, mu = _require(opts, "bounds", "p", "lam", "mu")
    params = WernerParams(p, lam, mu)
    eps_tail = opts.get("eps_tail") or 1e-12
    rep = bounds.bounds_report(params, opts.get("cutoff"), eps_tail)
    results = {
        "upper": rep.upper,
        "lower": rep.lower,
        "lower_clipped": max(rep.lower, 0.0),
        "mid": rep.mid,
        "marginal_entropy": rep.marginal_entropy,
        "global_entropy": rep.global_entropy,
        "conditional_entropy": rep.conditional_entropy,
        "region": rep.region,
    }
    budget = {"eps_tail": eps_tail, "conditional_tail_bound": rep.tail_bound}
    return results, rep.n_max, budget


def _m_region(opts):
    p, mu = _require(opts, "region", "p", "mu")
    results = {
        "region": bounds.separability_region(p, mu),
        "p_sep": bounds.p_separable(mu),
        "p_ppt": bounds.p_ppt(mu),
    }
    return results, None, {"closed_form": 0.0}


def _m_ppt_bounds(opts):
    (lam,) = _require(opts, "ppt-bounds", "lam")
    tol = opts.get("eps_tail") or 1e-10
    rep = ppt.bounds(lam, tol)
    results = {
        "upper": rep.upper,
        "lower": rep.lower,
        "mid": rep.mid,
        "entropy_global": rep.entropy_global,
        "entropy_reduced": rep.entropy_reduced,
        "conditional_entropy": rep.conditional_entropy,
        "norm_const": rep.norm_const,
    }
    return results, None, {"series_tol": tol}


MEASURES = {
    "discord0": _m_discord0,
    "gaussian-discord": _m_gaussian_discord,
    "delta0": _m_delta0,
    "gap": _m_gap,
    "bounds": _m_bounds,
    "region": _m_region,
    "ppt-bounds": _m_ppt_bounds,
}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_compute(args):
    opts = _collect(args)
    t0 = time.perf_counter()
    results, cutoff, budget = MEASURES[args.measure](opts)
    wall = time.perf_counter() - t0
    inputs = {k: v for k, v in opts.items() if k in ("p", "lam", "mu") and v is not None}
    text = report_json(args.measure, inputs, results, cutoff, budget, wall)
    _emit(text + "\n", args.out)
    return 0


def _parse_range(spec):
    """'start:stop:step' -> list of floats; a bare number -> [number]."""
    if spec is None:
        return [None]
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"range '{spec}' must be start:stop:step")
        start, stop, step = (float(x) for x in parts)
        if step <= 0:
            raise ValueError(f"range '{spec}' must have step > 0")
        n = int(math.floor((stop - start) / step + 1e-9)) + 1
        return [start + i * step for i in range(n)]
    return [float(spec)]


def _sweep_rows(args):
    ps = _parse_range(args.p)
    lams = _parse_range(args.lam)
    mus = _parse_range(args.mu)
    rows = []
    for p in ps:
        for lam in lams:
            for mu in mus:
                rows.append({"p": p, "lam": lam, "mu": mu})
    return rows


def _worker_count(n_rows):
    cap = os.environ.get("CVW_THREADS")
    workers = int(cap) if cap else (os.cpu_count() or 1)
    return max(1, min(workers, n_rows))


def cmd_sweep(args):
    base = _collect(args)
    rows = _sweep_rows(args)
    fn = MEASURES[args.measure]

    def run_row(row):
        opts = dict(base)
        opts.update({k: v for k, v in row.items() if v is not None})
        try:
            results, cutoff, _ = fn(opts)
            return results, cutoff, ""
        except Exception as exc:
            return {}, None, f"{type(exc).__name__}: {exc}"

    with ThreadPoolExecutor(max_workers=_worker_count(len(rows))) as pool:
        outcomes = list(pool.map(run_row, rows))

    columns = []
    for results, _, _ in outcomes:
        for key in results:
            if key not in columns:
                columns.append(key)
    failed = sum(1 for _, _, err in outcomes if err)

    if args.format == "json":
        docs = []
        for row, (results, cutoff, err) in zip(rows, outcomes):
            inputs = {k: v for k, v in row.items() if v is not None}
            doc = {"inputs": inputs, "results": results, "cutoff": cutoff}
            if err:
                doc["error"] = err
            docs.append(_round12(doc))
        _emit(json.dumps(docs, indent=2, sort_keys=True) + "\n", args.out)
    else:
        input_cols = [k for k in ("p", "lam", "mu") if rows and rows[0][k] is not None]
        header = input_cols + [f"{c}_nats" if _is_entropy_column(c) else c for c in columns]
        if failed:
            header = header + ["error"]
        lines = [",".join(header)]
        for row, (results, _, err) in zip(rows, outcomes):
            cells = [_fmt(row[k]) for k in input_cols]
            cells += [_fmt(results[c]) if c in results else "" for c in columns]
            if failed:
                cells.append(err.replace(",", ";"))
            lines.append(",".join(cells))
        _emit("\n".join(lines) + "\n", args.out)
    return 4 if failed else 0


_ENTROPY_COLUMNS = {
    "discord",
    "entropy_global",
    "entropy_reduced",
    "gaussian_discord",
    "conditional_entropy",
    "conditional_entropy_min",
    "gap",
    "gap_normalized",
    "delta0",
    "delta0_approx",
    "gap_approx",
    "upper",
    "lower",
    "lower_clipped",
    "mid",
    "marginal_entropy",
    "global_entropy",
    "gaussian_reference_entropy",
}


def _is_entropy_column(name):
    return name in _ENTROPY_COLUMNS


def _figure_grid(name):
    """Parameter grids for each emitted dataset."""
    frange = lambda a, b, s: [round(a + i * s, 10) for i in range(int(round((b - a) / s)) + 1)]
    if name == "fig-surface":
        return [
            ("discord0", {"p": p, "lam": lam})
            for p in frange(0.0, 1.0, 0.02)
            for lam in frange(0.0, 0.98, 0.02)
        ]
    if name == "fig-gaussian":
        return [
            ("gaussian-discord", {"p": p, "lam": lam})
            for lam in (0.1, 0.5, 0.9)
            for p in frange(0.05, 0.95, 0.05)
        ]
    if name == "fig-gap":
        rows = [
            ("gap", {"p": p, "lam": lam})
            for lam in (0.2, 0.8)
            for p in frange(0.05, 0.95, 0.05)
        ]
        rows += [("gap", {"p": 0.5, "lam": lam}) for lam in frange(0.05, 0.8, 0.05)]
        return rows
    if name == "fig-bounds-eq":
        return [("bounds", {"p": p, "lam": 0.8, "mu": 0.8}) for p in frange(0.0, 1.0, 0.02)]
    if name == "fig-bounds-mu4":
        mu = 0.8
        return [
            ("bounds", {"p": p, "lam": mu**4, "mu": mu}) for p in frange(0.0, 1.0, 0.02)
        ]
    if name == "fig-ppt":
        return [("ppt-bounds", {"lam": lam}) for lam in frange(0.0, 0.99, 0.01)]
    raise ValueError(f"unknown figure '{name}'")


_PLOT_STUB = """\
#!/usr/bin/env python3
\"\"\"Plot stub for {name}: loads the emitted CSV and draws the columns.\"\"\"
import csv
import sys

import matplotlib.pyplot as plt

rows = list(csv.DictReader(open("{csv_name}")))
numeric = {{k: [float(r[k]) for r in rows if r[k]] for k in rows[0] if k != "region"}}
x_key = next(iter(numeric))
fig, ax = plt.subplots()
for key, values in numeric.items():
    if key == x_key:
        continue
    ax.plot(numeric[x_key][: len(values)], values, label=key)
{extras}ax.set_xlabel(x_key)
ax.set_ylabel("nats")
ax.legend(fontsize=7)
fig.savefig("{name}.png", dpi=200)
print("wrote {name}.png")
"""


def cmd_figure(args):
    try:
        jobs = _figure_grid(args.name)
        os.makedirs(args.outdir, exist_ok=True)
        base = _collect(args)
        rows = []
        for measure, point in jobs:
            opts = dict(base)
            opts.update(point)
            results, cutoff, _ = MEASURES[measure](opts)
            row = dict(point)
            row.update(results)
            rows.append(row)
        columns = []
        for row in rows:
            for key in row:
                if key not in columns:
                    columns.append(key)
        csv_name = f"{args.name}.csv"
        csv_path = os.path.join(args.outdir, csv_name)
        with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(",".join(columns) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(row[c]) if c in row else "" for c in columns) + "\n")
        extras = ""
        if args.name == "fig-bounds-mu4":
            extras = (
                f'ax.axvline({bounds.p_separable(0.8)!r}, linestyle="-", color="gray")\n'
                f'ax.axvline({bounds.p_ppt(0.8)!r}, linestyle="--", color="gray")\n'
            )
        stub = _PLOT_STUB.format(name=args.name, csv_name=csv_name, extras=extras)
        with open(os.path.join(args.outdir, f"plot_{args.name.replace('-', '_')}.py"), "w") as fh:
            fh.write(stub)
    except OSError as exc:
        print(f"error: figure output failed: {exc}", file=sys.stderr)
        return 5
    print(f"wrote {csv_path}")
    return 0


def cmd_verify(args):
    results = acceptance.run_all(
        cutoff=args.cutoff,
        eps_int=args.eps_int if args.eps_int is not None else 1e-7,
        seed=args.seed if args.seed is not None else acceptance.DEFAULT_SEED,
    )
    for res in results:
        print(res.line)
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def _load_config(path):
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"malformed config line: {line!r}")
            key, val = (part.strip() for part in line.split("=", 1))
            values[key.replace("-", "_")] = val
    return values


_CONFIG_FLOAT_KEYS = ("p", "lam", "mu", "eps_tail", "eps_int")
_CONFIG_INT_KEYS = ("cutoff", "seed")


def _apply_config(args):
    if not getattr(args, "config", None):
        return
    values = _load_config(args.config)
    if "lambda" in values:
        values["lam"] = values.pop("lambda")
    for key, val in values.items():
        if not hasattr(args, key) or getattr(args, key) is not None:
            continue  # flags override config
        if key in _CONFIG_INT_KEYS:
            setattr(args, key, int(val))
        elif key in _CONFIG_FLOAT_KEYS:
            setattr(args, key, float(val))
        else:
            setattr(args, key, val)


def _collect(args):
    return {
        "p": getattr(args, "p", None),
        "lam": getattr(args, "lam", None),
        "mu": getattr(args, "mu", None),
        "cutoff": getattr(args, "cutoff", None),
        "eps_tail": getattr(args, "eps_tail", None),
        "eps_int": getattr(args, "eps_int", None),
        "seed": getattr(args, "seed", None),
    }


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(parser, ranged=False):
    kind = str if ranged else float
    hint = " (accepts start:stop:step)" if ranged else ""
    parser.add_argument("--p", type=kind, help="mixing probability" + hint)
    parser.add_argument("--lambda", dest="lam", type=kind, help="squeezing factor" + hint)
    parser.add_argument("--mu", type=kind, help="thermal factor" + hint)
    parser.add_argument("--cutoff", type=int, help="Fock cutoff override")
    parser.add_argument("--eps-tail", dest="eps_tail", type=float, help="truncation tail tolerance")
    parser.add_argument("--eps-int", dest="eps_int", type=float, help="quadrature tolerance")
    parser.add_argument("--seed", type=int, help="seed for any sampling oracle")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", help="output path (default stdout)")
    parser.add_argument("--config", help="key=value file presetting the flags above")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cvwerner",
        description="Nonclassical-correlation measures for CV Werner states (nats).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="evaluate one measure at one point")
    p_compute.add_argument("measure", choices=sorted(MEASURES))
    _add_common(p_compute)
    p_compute.set_defaults(func=cmd_compute)

    p_sweep = sub.add_parser("sweep", help="evaluate a measure over a parameter grid")
    p_sweep.add_argument("measure", choices=sorted(MEASURES))
    _add_common(p_sweep, ranged=True)
    p_sweep.set_defaults(func=cmd_sweep)

    p_fig = sub.add_parser("figure", help="emit a named figure dataset plus plot stub")
    p_fig.add_argument(
        "name",
        choices=(
            "fig-surface",
            "fig-gaussian",
            "fig-gap",
            "fig-bounds-eq",
            "fig-bounds-mu4",
            "fig-ppt",
        ),
    )
    p_fig.add_argument("--outdir", default=".", help="output directory")
    _add_common(p_fig)
    p_fig.set_defaults(func=cmd_figure)

    p_verify = sub.add_parser("verify", help="run the acceptance battery")
    _add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

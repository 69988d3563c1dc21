"""Command-line interface.

Subcommands: gen, stats, solve, verify, bounds, design, experiment,
montecarlo.  Machine-readable output is JSON (sorted keys) on stdout;
experiment and montecarlo write CSV.

Exit codes (stable contract): 0 success/SAT, 1 verification predicate
false, 2 usage or malformed input, 3 UNSAT, 4 gave up / stuck.

Every randomized command echoes its seed in the report; when --seed is
omitted one is drawn from the OS and logged, so any run can be reproduced.
Reports are byte-identical across runs with the same seed except for the
elapsed_ms field.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import augment, bounds, constructions, designs, flow, solvers
from .errors import FormatError, GaveUpError, StuckError
from .hypergraph import (
    EdgeSelection,
    load_hypergraph,
    save_hypergraph,
    stats,
    verify_selection,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_UNSAT = 3
EXIT_GAVE_UP = 4

EXPERIMENT_COLUMNS = [
    "gen",
    "gen_seed",
    "gen_t",
    "n",
    "r",
    "d",
    "q",
    "k",
    "t",
    "algo",
    "seed",
    "status",
    "iterations",
    "elapsed_ms",
]

RANDOM_ALGOS = {"lll", "lll-girth4", "partition"}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def _auto_seed() -> int:
    return int.from_bytes(os.urandom(8), "big") >> 1


# ---------------------------------------------------------------------------
# gen


def _build_instance(kind: str, p: dict):
    if kind == "projective":
        return constructions.projective_full(p["gen_t"])
    if kind == "projective-truncated":
        return constructions.projective_truncated(p["gen_t"])
    if kind == "codegree-uniform":
        return constructions.codegree_gadget_uniform(p["n"], p["r"], p["gen_t"])
    if kind == "codegree-partite":
        return constructions.codegree_gadget_partite(p["n"], p["r"], p["gen_t"])
    if kind == "bipartite-tight":
        return constructions.bipartite_tight_gadget(p["n"], p["gen_t"])
    if kind == "figure1":
        return constructions.figure1_witness()
    if kind == "random-regular":
        return constructions.random_regular(p["n"], p["r"], p["d"], p["gen_seed"])
    if kind == "random-partite":
        return constructions.random_regular_partite(
            p["n"], p["r"], p["d"], p["gen_seed"]
        )
    if kind == "random-girth4":
        return constructions.random_girth4_regular(
            p["n"], p["r"], p["d"], p["gen_seed"], p.get("max_tries", 1000)
        )
    if kind in ("affine-plane-dual", "affine-plane"):
        design = designs.affine_plane(p["q"])
        if kind == "affine-plane-dual" or p.get("dual"):
            return designs.design_dual_hypergraph(design)
        return design
    raise ValueError(f"unknown generator kind {kind!r}")


def cmd_gen(args) -> int:
    params = {
        "gen_t": args.t,
        "n": args.n,
        "r": args.r,
        "d": args.d,
        "q": args.q,
        "gen_seed": args.seed,
        "max_tries": args.max_tries,
        "dual": args.dual,
    }
    try:
        obj = _build_instance(args.kind, params)
    except (ValueError, TypeError, GaveUpError) as exc:
        print(f"gen {args.kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(obj, designs.Design):
        designs.save_design(obj, args.out)
    else:
        save_hypergraph(obj, args.out, fmt=args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# stats / verify


def cmd_stats(args) -> int:
    h = load_hypergraph(args.input)
    s = stats(h, with_codegree=args.codegree)
    report = {
        "n": h.n,
        "m": h.m,
        "num_parts": h.num_parts,
        "r_uniform": s.r_uniform,
        "min_degree": s.min_degree,
        "max_degree": s.max_degree,
        "degree_ratio": _jsonable(s.degree_ratio),
        "girth_below_four": s.girth_below_four,
        "min_codegree": s.min_codegree,
        "min_partite_codegree": s.min_partite_codegree,
    }
    _emit(report)
    return EXIT_OK


def _read_selection(path) -> list:
    with open(path) as fh:
        return [int(x) for x in fh.read().split()]


def cmd_verify(args) -> int:
    h = load_hypergraph(args.input)
    indices = _read_selection(args.selection)
    sel = EdgeSelection(h, indices)
    report = verify_selection(sel, args.t)
    _emit(
        {
            "is_t_shallow": report.is_t_shallow,
            "is_hitting": report.is_hitting,
            "max_deg": report.max_deg,
            "uncovered": list(report.uncovered),
            "t": args.t,
        }
    )
    return EXIT_OK if report.is_t_shallow and report.is_hitting else EXIT_FALSE


# ---------------------------------------------------------------------------
# solve


def _status_exit(status: solvers.SolveStatus) -> int:
    if status == solvers.SolveStatus.SAT:
        return EXIT_OK
    if status == solvers.SolveStatus.UNSAT:
        return EXIT_UNSAT
    return EXIT_GAVE_UP


def _run_algo(h, algo, t, seed, args):
    if algo == "exact":
        return solvers.exact_shallow_hitting(h, t, budget=args.budget)
    if algo == "lll":
        return solvers.lll_hitting(h, t, seed, max_resamples=args.max_resamples)
    if algo == "lll-girth4":
        return solvers.lll_hitting_girth4(
            h,
            t,
            seed,
            max_restarts=args.max_restarts,
            max_resamples=args.max_resamples,
        )
    if algo == "codegree":
        return augment.codegree_augment_uniform(h, t)
    if algo == "codegree-partite":
        return augment.codegree_augment_partite(h, t)
    if algo == "bipartite-flow":
        return flow.bipartite_factor(h, t)
    raise ValueError(f"unknown algorithm {algo!r}")


def cmd_solve(args) -> int:
    h = load_hypergraph(args.input)
    seed = args.seed
    if seed is None and args.algo in RANDOM_ALGOS:
        seed = _auto_seed()
    report = {"algo": args.algo, "t": args.t, "seed": seed}
    try:
        if args.algo == "exact-max":
            out = solvers.exact_max_shallow(h, args.t, budget=args.budget)
            report.update(
                {
                    "status": "SAT" if out.optimal else "GAVE_UP",
                    "size": out.size,
                    "optimal": out.optimal,
                    "upper_bound": out.upper_bound,
                    "eta": _jsonable(out.eta),
                    "selection": sorted(out.selection.chosen),
                    "iterations": out.iterations,
                    "elapsed_ms": out.elapsed * 1000.0,
                }
            )
            _emit(report)
            if args.selection_out:
                _write_selection(args.selection_out, sorted(out.selection.chosen))
            return EXIT_OK if out.optimal else EXIT_GAVE_UP
        if args.algo == "partition":
            res = solvers.partition_shallow(
                h, args.t, k=args.k, seed=seed, max_resamples=args.max_resamples
            )
            report.update(
                {
                    "status": "SAT",
                    "k": res.k,
                    "classes": [sorted(c.chosen) for c in res.classes],
                    "selection": None,
                    "iterations": res.iterations,
                    "elapsed_ms": res.elapsed * 1000.0,
                }
            )
            _emit(report)
            return EXIT_OK
        out = _run_algo(h, args.algo, args.t, seed, args)
    except (StuckError, GaveUpError) as exc:
        report.update({"status": "GAVE_UP", "reason": str(exc)})
        _emit(report)
        return EXIT_GAVE_UP
    except ValueError as exc:
        print(f"solve: {exc}", file=sys.stderr)
        return EXIT_USAGE
    selection = sorted(out.selection.chosen) if out.selection is not None else None
    report.update(
        {
            "status": out.status.value,
            "selection": selection,
            "iterations": out.iterations,
            "elapsed_ms": out.elapsed * 1000.0,
        }
    )
    _emit(report)
    if args.selection_out and selection is not None:
        _write_selection(args.selection_out, selection)
    return _status_exit(out.status)


def _write_selection(path, indices) -> None:
    with open(path, "w") as fh:
        fh.write("\n".join(map(str, indices)) + ("\n" if indices else ""))


# ---------------------------------------------------------------------------
# bounds


def cmd_bounds(args) -> int:
    f = args.formula
    if f == "min-t-general":
        res = bounds.min_t_general(args.mu, args.r)
        report = {
            "formula": f,
            "mu": args.mu,
            "r": args.r,
            "t": res.t,
            "closed_form": res.closed_form,
            "exact_boundary": res.exact_boundary,
        }
    elif f == "min-t-girth4":
        res = bounds.min_t_girth4(args.eta, args.r)
        report = {
            "formula": f,
            "eta": args.eta,
            "r": args.r,
            "t": res.t,
            "closed_form": res.closed_form,
            "exact_boundary": res.exact_boundary,
        }
    elif f == "lambert-w":
        report = {"formula": f, "x": args.x, "w": bounds.lambert_w(args.x)}
    elif f == "lambert-c":
        report = {"formula": f, "c": bounds.girth4_constant()}
    elif f == "partition-k":
        report = {
            "formula": f,
            "Delta": args.Delta,
            "r": args.r,
            "t": args.t,
            "k": bounds.partition_k(args.Delta, args.r, args.t),
        }
    elif f == "shallow-size":
        report = {
            "formula": f,
            "n": args.n,
            "r": args.r,
            "t": args.t,
            "delta": args.delta,
            "Delta": args.Delta,
            "size": bounds.shallow_size_guarantee(
                args.n, args.r, args.t, args.delta, args.Delta
            ),
        }
    elif f == "codegree":
        th = bounds.codegree_thresholds(args.n, args.r, args.t)
        report = {
            "formula": f,
            "n": args.n,
            "r": args.r,
            "t": args.t,
            "k": th.k,
            "uniform_lb": _jsonable(th.uniform_lb),
            "uniform_sufficient": _jsonable(th.uniform_sufficient),
            "partite_lb": _jsonable(th.partite_lb),
            "partite_sufficient": th.partite_sufficient,
        }
    elif f == "rrs":
        report = {
            "formula": f,
            "n": args.n,
            "r": args.r,
            "threshold": bounds.rrs_matching_threshold(args.n, args.r),
        }
    elif f == "bipartite-sufficient":
        report = {
            "formula": f,
            "sufficient": bounds.bipartite_sufficient(
                args.size_a, args.size_b, args.delta_a, args.delta_b, args.t
            ),
        }
    else:
        raise ValueError(f"unknown formula {f!r}")
    if args.text:
        width = max(len(k) for k in report)
        for key in sorted(report):
            print(f"{key:<{width}}  {report[key]}")
    else:
        _emit(report)
    return EXIT_OK


# ---------------------------------------------------------------------------
# design


def cmd_design(args) -> int:
    if args.action == "construct":
        d = designs.affine_plane(args.q)
        designs.save_design(d, args.out)
        return EXIT_OK
    if args.action == "verify":
        d = designs.load_design(args.input, unchecked=True)
        report = designs.verify_design(d)
        _emit(
            {
                "ok": report.ok,
                "design_ok": report.design_ok,
                "resolution_ok": report.resolution_ok,
                "problems": list(report.problems),
            }
        )
        return EXIT_OK if report.ok else EXIT_FALSE
    if args.action == "dualize":
        d = designs.load_design(args.input)
        h = designs.design_dual_hypergraph(d)
        save_hypergraph(h, args.out, fmt=args.format)
        return EXIT_OK
    raise ValueError(f"unknown design action {args.action!r}")


# ---------------------------------------------------------------------------
# experiment


def _parse_grid(path) -> dict:
    grid: dict = {}
    with open(path) as fh:
        for ln, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise FormatError(f"line {ln}: expected key=value[,value...]")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in EXPERIMENT_COLUMNS[:11]:
                raise FormatError(f"line {ln}: unknown grid key {key!r}")
            values = [v.strip() for v in value.split(",") if v.strip()]
            if not values:
                raise FormatError(f"line {ln}: no values for {key!r}")
            if key in ("gen", "algo"):
                grid[key] = values
            else:
                grid[key] = [int(v) for v in values]
    for required in ("gen", "algo", "t", "seed"):
        if required not in grid:
            raise FormatError(f"grid is missing required key {required!r}")
    return grid


def _grid_cells(grid: dict):
    axes = [key for key in EXPERIMENT_COLUMNS[:11] if key in grid]
    def expand(prefix, remaining):
        if not remaining:
            yield dict(prefix)
            return
        key = remaining[0]
        for value in grid[key]:
            prefix[key] = value
            yield from expand(prefix, remaining[1:])
        del prefix[key]
    yield from expand({}, axes)


def _run_cell(cell: dict) -> dict:
    row = {col: cell.get(col, "") for col in EXPERIMENT_COLUMNS}
    ns = argparse.Namespace(
        budget=None, max_resamples=None, max_restarts=20, k=cell.get("k")
    )
    try:
        h = _build_instance(cell["gen"], {**cell, "gen_seed": cell.get("gen_seed", 1)})
        if isinstance(h, designs.Design):
            raise ValueError("experiment cells must generate hypergraphs")
        algo = cell["algo"]
        if algo == "exact-max":
            out = solvers.exact_max_shallow(h, cell["t"])
            row.update(
                status="SAT" if out.optimal else "GAVE_UP",
                iterations=out.iterations,
                elapsed_ms=out.elapsed * 1000.0,
            )
        elif algo == "partition":
            res = solvers.partition_shallow(
                h, cell["t"], k=cell.get("k"), seed=cell["seed"]
            )
            row.update(
                status="SAT", iterations=res.iterations, elapsed_ms=res.elapsed * 1000.0
            )
        else:
            out = _run_algo(h, algo, cell["t"], cell["seed"], ns)
            row.update(
                status=out.status.value,
                iterations=out.iterations,
                elapsed_ms=out.elapsed * 1000.0,
            )
    except (StuckError, GaveUpError) as exc:
        row.update(status="GAVE_UP", iterations="", elapsed_ms="")
        row["status"] = "GAVE_UP"
    return row


def cmd_experiment(args) -> int:
    try:
        grid = _parse_grid(args.spec)
    except (OSError, FormatError, ValueError) as exc:
        print(f"experiment: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cells = list(_grid_cells(grid))
    if args.workers > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_run_cell, cells))
    else:
        rows = [_run_cell(cell) for cell in cells]
    with open(args.out, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=EXPERIMENT_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    return EXIT_OK


def cmd_montecarlo(args) -> int:
    h = load_hypergraph(args.input)
    seed = args.seed if args.seed is not None else _auto_seed()
    result = solvers.monte_carlo_experiment(h, args.t, args.trials, seed)
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        writer = csv.writer(out)
        writer.writerow(["trial", "seed", "max_deg", "shallow"])
        for trial, max_deg, shallow in result.rows:
            writer.writerow([trial, seed, max_deg, int(shallow)])
    finally:
        if out is not sys.stdout:
            out.close()
    print(
        f"success_rate={result.success_rate} mean_max_degree={result.mean_max_degree}"
        f" seed={seed}",
        file=sys.stderr,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shallowhit",
        description="Shallow hitting edge sets: generators, solvers, bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a hypergraph or design file")
    p.add_argument(
        "kind",
        choices=[
            "projective",
            "projective-truncated",
            "codegree-uniform",
            "codegree-partite",
            "bipartite-tight",
            "figure1",
            "random-regular",
            "random-partite",
            "random-girth4",
            "affine-plane",
            "affine-plane-dual",
        ],
    )
    p.add_argument("--t", type=int, default=None, help="construction parameter t")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-tries", type=int, default=1000)
    p.add_argument("--dual", action="store_true", help="emit the dual hypergraph")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="structural statistics of a hypergraph file")
    p.add_argument("input")
    p.add_argument("--codegree", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("solve", help="run a solver; exit 0 SAT / 3 UNSAT / 4 gave up")
    p.add_argument("input")
    p.add_argument(
        "--algo",
        required=True,
        choices=[
            "exact",
            "exact-max",
            "lll",
            "lll-girth4",
            "partition",
            "codegree",
            "codegree-partite",
            "bipartite-flow",
        ],
    )
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--max-resamples", type=int, default=None)
    p.add_argument("--max-restarts", type=int, default=20)
    p.add_argument("--k", type=int, default=None, help="partition class count")
    p.add_argument("--selection-out", default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="verify a selection file against a hypergraph")
    p.add_argument("input")
    p.add_argument("--selection", required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="evaluate a threshold formula")
    p.add_argument(
        "formula",
        choices=[
            "min-t-general",
            "min-t-girth4",
            "lambert-w",
            "lambert-c",
            "partition-k",
            "shallow-size",
            "codegree",
            "rrs",
            "bipartite-sufficient",
        ],
    )
    p.add_argument("--mu", type=float, default=1.0)
    p.add_argument("--eta", type=float, default=1.0)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--Delta", type=int, default=None)
    p.add_argument("--size-a", type=int, default=None)
    p.add_argument("--size-b", type=int, default=None)
    p.add_argument("--delta-a", type=int, default=None)
    p.add_argument("--delta-b", type=int, default=None)
    p.add_argument("--text", action="store_true", help="aligned text output")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("design", help="construct / verify / dualize designs")
    p.add_argument("action", choices=["construct", "verify", "dualize"])
    p.add_argument("input", nargs="?")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser(
        "experiment",
        help="batch grid runner; CSV columns: " + ",".join(EXPERIMENT_COLUMNS),
    )
    p.add_argument("spec", help="grid file: key=value[,value...] lines")
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("montecarlo", help="one-pass pick experiment, CSV output")
    p.add_argument("input")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_montecarlo)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

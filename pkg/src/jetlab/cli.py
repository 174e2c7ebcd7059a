"""Command-line driver: identity suite, experiments, set construction, estimation.

Exit codes: 0 all configured checks passed, 1 at least one check failed,
2 usage or input errors (bad arguments, malformed files, scale windows).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .boxdim import ScalePlan, dyadic_plan, estimate_dimension
from .errors import ParseError, ScaleWindowError
from .experiments import (EXPERIMENT_NAMES, builtin_config, config_from_json,
                          identity_report_to_json, report_to_json,
                          run_experiment, run_identity_suite)
from .fractals import (axis_segment_set, box_set, cantor_axis_set, graph_curve_set,
                       linear_image_set, plane_product_set, union_pair_set)
from .jets import Polynomial
from .serialize import (estimate_to_json, read_set, write_counts_csv, write_set)
from .version import __version__

_SET_RECIPES = ("cantor", "segment", "box", "plane-product", "graph-curve",
                "linear-jet", "union-pair")


def _print_checks(checks) -> bool:
    ok = True
    for c in checks:
        tag = "PASS" if c.passed else "FAIL"
        tol = f" +/- {c.tolerance}" if c.tolerance is not None else ""
        print(f"[{tag}] {c.label}: observed={c.observed} expected={c.expected}{tol}"
              + (f"  ({c.detail})" if c.detail else ""))
        ok = ok and c.passed
    return ok


def _parse_scales(text: str, per_octave: int, guard: int) -> ScalePlan:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return dyadic_plan(int(lo), int(hi), per_octave=per_octave, guard=guard)
    scales = tuple(float(s) for s in text.split(","))
    return ScalePlan(scales, min_points_per_cell_guard=guard)


def _cmd_identity_suite(args) -> int:
    ks = tuple(int(s) for s in args.k.split(","))
    rep = run_identity_suite(ks, trials=args.trials, seed=args.seed)
    ok = _print_checks(rep.checks)
    if rep.first_counterexample:
        print(f"first counterexample: {rep.first_counterexample}")
    print(f"identity-suite: {rep.failures} failures over k={list(ks)}, "
          f"{args.trials} trials each")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(identity_report_to_json(rep), fh, sort_keys=True, indent=2)
            fh.write("\n")
        print(f"wrote {args.out}")
    return 0 if (ok and rep.passed) else 1


def _cmd_experiment(args) -> int:
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = config_from_json(json.load(fh))
        if cfg.name != args.name:
            print(f"error: config file is for {cfg.name!r}, not {args.name!r}",
                  file=sys.stderr)
            return 2
    else:
        cfg = builtin_config(args.name)
    rep = run_experiment(cfg)
    ok = _print_checks(rep.checks)
    print(f"{rep.name}: {'PASS' if rep.passed else 'FAIL'} "
          f"({rep.wall_time_s:.2f} s)")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, f"{rep.name}-report.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report_to_json(rep), fh, sort_keys=True, indent=2)
            fh.write("\n")
        for label, counts in rep.counts.items():
            if counts:
                write_counts_csv(counts, os.path.join(
                    args.out, f"{rep.name}-{label}-counts.csv"))
        print(f"wrote reports under {args.out}")
    return 0 if ok else 1


def _cmd_make_set(args) -> int:
    k = args.k
    if args.recipe == "cantor":
        sset = cantor_axis_set(k, args.alpha, args.depth, axis=args.axis, t=args.t)
    elif args.recipe == "segment":
        sset = axis_segment_set(k, args.axis, args.n, t=args.t)
    elif args.recipe == "box":
        sset = box_set(k, args.which, args.resolution, t=args.t)
    elif args.recipe == "plane-product":
        sset = plane_product_set(k, args.beta, args.depth, t=args.t)
    elif args.recipe == "graph-curve":
        sset = graph_curve_set(k, args.t, args.n)
    elif args.recipe == "linear-jet":
        sset = linear_image_set(k, args.m, args.b, args.alpha, args.depth)
    elif args.recipe == "union-pair":
        f = Polynomial((0, 0, 1))
        sset = union_pair_set(k, f, args.t, args.alpha, args.beta, args.depth)
    else:
        print(f"error: unknown recipe {args.recipe!r}", file=sys.stderr)
        return 2
    write_set(sset, args.out)
    print(f"wrote {len(sset)} points (k={sset.k}, "
          f"construction={sset.meta.get('construction')}) to {args.out}")
    return 0


def _cmd_estimate_dim(args) -> int:
    sset = read_set(args.input)
    plan = _parse_scales(args.scales, args.per_octave, args.guard)
    est = estimate_dimension(sset, plan)
    print(f"slope={est.slope:.4f} r2={est.r2:.5f} "
          f"window=[{est.scale_window[0]:g}, {est.scale_window[1]:g}] "
          f"scales_used={len(est.counts)} trimmed={len(est.trimmed)}")
    for eps, reason in est.trimmed:
        print(f"  trimmed eps={eps:g}: {reason}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(estimate_to_json(est), fh, sort_keys=True, indent=2)
            fh.write("\n")
        print(f"wrote {args.out}")
    if args.csv:
        write_counts_csv(est.counts, args.csv)
        print(f"wrote {args.csv}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="jetlab",
        description="Jet-space Carnot group experiments: exact identities, "
                    "factor maps, and anisotropic box-counting dimension.")
    ap.add_argument("--version", action="version", version=f"jetlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identity-suite", help="exact group/splitting law checks")
    p.add_argument("--k", default="1,2,3,4", help="comma list of jet orders")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--out", help="write JSON report here")
    p.set_defaults(func=_cmd_identity_suite)

    p = sub.add_parser("experiment", help="run a named dimension experiment")
    p.add_argument("name", choices=sorted(EXPERIMENT_NAMES))
    p.add_argument("--config", help="JSON config file overriding the builtin")
    p.add_argument("--out", help="directory for report JSON and counts CSVs")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("make-set", help="construct a point cloud and save JSONL")
    p.add_argument("recipe", choices=_SET_RECIPES)
    p.add_argument("--out", required=True, help="output JSONL path")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--beta", type=float, default=2.0)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--axis", default="x")
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--which", choices=("plane", "group"), default="plane")
    p.add_argument("--resolution", type=int, default=4)
    p.add_argument("--m", type=float, default=2.0)
    p.add_argument("--b", type=float, default=0.0)
    p.set_defaults(func=_cmd_make_set)

    p = sub.add_parser("estimate-dim", help="box-dimension estimate of a JSONL cloud")
    p.add_argument("--input", required=True)
    p.add_argument("--scales", default="2..10",
                   help="dyadic range 'LO..HI' or comma list of epsilons")
    p.add_argument("--per-octave", type=int, default=1)
    p.add_argument("--guard", type=int, default=2)
    p.add_argument("--out", help="write estimate JSON here")
    p.add_argument("--csv", help="write epsilon,count CSV here")
    p.set_defaults(func=_cmd_estimate_dim)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ScaleWindowError as exc:
        print(f"scale-window error: {exc}", file=sys.stderr)
        if exc.suggested_max_depth is not None:
            print(f"suggestion: use --scales 2..{exc.suggested_max_depth}",
                  file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Config-driven command line surface.

Subcommands: ``conjugate``, ``norm``, ``mult-norm``, ``prod-norm``,
``classify``, ``verify``, ``examples``.  All read a strict JSON config
(see ``config``) naming Young functions, spaces, models, functions, and
verification triples.  Exit codes: 0 consistent, 1 falsified or
undetermined, 2 configuration error, 3 numerical failure.

A passing verification verdict means "consistent up to the reported
constant on the tested probes"; only a falsification is a certified
counterexample.  The CLI prints this distinction with every verify run.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import reports
from .config import ConfigError, RunConfig, load_config
from .measure import StepFunction
from .multprod import (OptimizerConfig, mult_norm, product_quasinorm)
from .spaces import NumericalError, norm
from .theorems import (classify, default_probes, reproduce_examples,
                       verify_factorization, verify_multiplier_theorem,
                       verify_perfectness)
from .young import conjugate, conjugate_truncated

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

_VERDICT_BANNER = ("verdicts: a pass is 'consistent up to constant C on the "
                   "tested grid', not a proof; a fail is a certified "
                   "counterexample")


def _optimizer(cfg: RunConfig, seed) -> OptimizerConfig:
    kw = dict(cfg.optimizer)
    kw["seed"] = cfg.seed if seed is None else seed
    return OptimizerConfig(**kw)


def _out_dir(args) -> Path:
    return Path(args.out) if args.out else Path("out")


def _parse_grid(text):
    try:
        ts = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"invalid probe grid {text!r}")
    if not ts or any(t < 0 for t in ts):
        raise ConfigError("probe grid must be nonnegative numbers")
    return ts


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_conjugate(args, cfg: RunConfig) -> int:
    G = cfg.require("young", args.G)
    F = cfg.require("young", args.F)
    if args.a is not None:
        result = conjugate_truncated(G, F, args.a)
    else:
        result = conjugate(G, F)
    ts = _parse_grid(args.t_grid) if args.t_grid else [2.0**k for k in range(-6, 7)]
    rows = [(t, result.value(t)) for t in ts]
    text = reports.csv_lines(("t", "value"), rows)
    sys.stdout.write(text)
    if args.out:
        tag = f"{args.G}_minus_{args.F}" + (f"_a{args.a:g}" if args.a else "")
        reports.write_csv(_out_dir(args) / f"conjugate_{tag}.csv",
                          ("t", "value"), rows)
    return EXIT_OK


def cmd_norm(args, cfg: RunConfig) -> int:
    X = cfg.require("spaces", args.space)
    f = cfg.require("functions", args.function)
    nv = norm(X, f)
    print(reports.fmt_num(float(nv)))
    cert = {
        "command": "norm",
        "space": args.space,
        "function": args.function,
        "value": float(nv),
        "method": nv.method,
        "iterations": nv.iterations,
    }
    reports.write_json(_out_dir(args) / f"norm_{args.space}_{args.function}.json",
                       cert)
    return EXIT_OK


def cmd_mult_norm(args, cfg: RunConfig) -> int:
    X = cfg.require("spaces", args.X)
    Y = cfg.require("spaces", args.Y)
    f = cfg.require("functions", args.function)
    opt = _optimizer(cfg, args.seed)
    est = mult_norm(f, X, Y, opt)
    cert = {
        "command": "mult_norm",
        "X": args.X,
        "Y": args.Y,
        "function": args.function,
        "lower": est.lower,
        "witness": list(est.certificate),
        "note": est.note,
    }
    path = reports.write_json(
        _out_dir(args) / f"mult_norm_{args.X}_{args.Y}_{args.function}.json", cert)
    # Re-verify feasibility of the certificate before trusting the estimate.
    if not f.is_zero:
        nx = X.norm_values(np.asarray(est.certificate), f.model)
        if abs(nx - 1.0) > 1e-6:
            print(f"optimizer non-convergence: witness norm {nx!r}; "
                  f"partial certificate at {path}", file=sys.stderr)
            return EXIT_NUMERICAL
    print(reports.fmt_num(est.lower))
    return EXIT_OK


def cmd_prod_norm(args, cfg: RunConfig) -> int:
    X = cfg.require("spaces", args.X)
    Y = cfg.require("spaces", args.Y)
    f = cfg.require("functions", args.function)
    opt = _optimizer(cfg, args.seed)
    est = product_quasinorm(f, X, Y, opt)
    cert = {
        "command": "prod_norm",
        "X": args.X,
        "Y": args.Y,
        "function": args.function,
        "upper": est.upper,
        "factor_g": list(est.certificate_g),
        "factor_h": list(est.certificate_h),
        "note": est.note,
    }
    path = reports.write_json(
        _out_dir(args) / f"prod_norm_{args.X}_{args.Y}_{args.function}.json", cert)
    if not np.allclose(est.certificate_g * est.certificate_h, f.values,
                       rtol=1e-9, atol=0.0):
        print(f"optimizer non-convergence: certificate does not factor the "
              f"function; partial certificate at {path}", file=sys.stderr)
        return EXIT_NUMERICAL
    print(reports.fmt_num(est.upper))
    return EXIT_OK


def cmd_classify(args, cfg: RunConfig) -> int:
    X = cfg.require("spaces", args.space)
    model = cfg.require("models", args.model)
    F = cfg.require("young", args.F)
    G = cfg.require("young", args.G)
    cls = classify(X, model, F, G)
    sys.stdout.write(reports.dump_json(cls.to_json_dict()))
    return EXIT_OK


def _verify_one(mode, cfg, name, seed, emit_plot):
    triple = cfg.require("triples", name)
    X = cfg.require("spaces", triple.space)
    model = cfg.require("models", triple.model)
    F = cfg.require("young", triple.F)
    G = cfg.require("young", triple.G)
    opt = _optimizer(cfg, seed)
    probes = default_probes(model, triple.probes, opt.seed)
    if mode == "multiplier":
        rep = verify_multiplier_theorem(X, model, F, G, probes, opt,
                                        c_max=triple.c_max, triple_id=name)
        plot = [(float(r.probe_id), r.mult_lower, r.lux_value) for r in rep.rows]
    elif mode == "factorization":
        rep = verify_factorization(X, model, F, G, probes, opt,
                                   c_split=triple.c_split, triple_id=name)
        plot = []
        if rep.condition is not None and rep.regime is not None:
            from .asymptotics import DEFAULT_GRID, inverse_fn, product_fn
            from .theorems import _branch_conjugate, _factorization_case
            cls = classify(X, model, F, G)
            case, _, conj_kind = _factorization_case(X, model, cls)
            if case == "linf" or conj_kind == "truncated":
                _, conj = _branch_conjugate(model, cls, F, G)
            else:
                conj = conjugate(G, F)
            lhs = product_fn(inverse_fn(F), inverse_fn(conj))
            rhs = inverse_fn(G)
            for t in DEFAULT_GRID.probes(rep.regime):
                try:
                    plot.append((float(t), lhs(float(t)), rhs(float(t))))
                except ArithmeticError:
                    continue
    elif mode == "perfectness":
        rep = verify_perfectness(X, model, F, G, probes, opt,
                                 c_max=triple.c_max, triple_id=name)
        plot = [(float(r.probe_id), r.mult_lower, r.lux_value) for r in rep.rows]
    else:
        raise ConfigError(f"unknown verify mode {mode!r}")
    return rep, plot


def cmd_verify(args, cfg: RunConfig) -> int:
    if args.mode == "examples":
        return cmd_examples(args, cfg)
    names = args.triple
    if not names:
        raise ConfigError("verify requires at least one --triple name")
    print(_VERDICT_BANNER)
    out = _out_dir(args)
    seed = args.seed

    def run(name):
        return _verify_one(args.mode, cfg, name, seed, args.emit_plot_data)

    if args.jobs > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run, names))
    else:
        results = [run(name) for name in names]

    worst = EXIT_OK
    for name, (rep, plot) in zip(names, results):
        reports.write_json(out / f"verify_{args.mode}_{name}.json",
                           rep.to_json_dict())
        if hasattr(rep, "rows"):
            reports.write_csv(out / f"verify_{args.mode}_{name}.csv",
                              reports.THEOREM_CSV_HEADER,
                              reports.theorem_report_rows(rep))
        else:
            rows = [(name, rep.case, s.probe_id, s.product_upper, "", "",
                     s.status) for s in rep.splits]
            reports.write_csv(out / f"verify_{args.mode}_{name}.csv",
                              reports.THEOREM_CSV_HEADER, rows)
        if args.emit_plot_data and plot:
            reports.write_csv(Path(args.emit_plot_data), ("t", "lhs", "rhs"),
                              plot)
        print(f"{name}: {rep.verdict}")
        if not rep.consistent:
            worst = max(worst, EXIT_FALSIFIED)
    return worst


def cmd_examples(args, cfg: RunConfig) -> int:
    seed = args.seed if args.seed is not None else cfg.seed
    rows = reproduce_examples(seed=seed)
    out = _out_dir(args)
    reports.write_csv(out / "examples.csv", reports.EXAMPLES_CSV_HEADER,
                      reports.example_rows(rows))
    reports.write_json(out / "examples.json",
                       [r.to_json_dict() for r in rows])
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name}: {r.metric} = {reports.fmt_num(r.value)} "
              f"(bound {reports.fmt_num(r.bound)})"
              + (f" [{r.note}]" if r.note else ""))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FALSIFIED


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="clspaces",
        description="Young-function calculus, Calderon-Lozanovskii norms, "
                    "and multiplier/factorization verification at desk scale.",
    )
    ap.add_argument("--config", required=False, help="path to the JSON config")
    ap.add_argument("--seed", type=int, default=None,
                    help="override the config seed")
    ap.add_argument("--jobs", type=int, default=1,
                    help="parallel workers for verification runs")
    ap.add_argument("--emit-plot-data", default=None, metavar="PATH",
                    help="write (t, lhs, rhs) columns for external plotting")
    ap.add_argument("--out", default=None, metavar="DIR",
                    help="directory for report and certificate files")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conjugate", help="tabulate a generalized conjugate")
    p.add_argument("G")
    p.add_argument("F")
    p.add_argument("--a", type=float, default=None,
                   help="truncation level for the truncated conjugate")
    p.add_argument("--t-grid", default=None,
                   help="comma-separated probe points (default: powers of 2)")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("norm", help="norm of a function in a space")
    p.add_argument("space")
    p.add_argument("function")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("mult-norm", help="multiplier-norm lower bound")
    p.add_argument("X")
    p.add_argument("Y")
    p.add_argument("function")
    p.set_defaults(func=cmd_mult_norm)

    p = sub.add_parser("prod-norm", help="product quasi-norm upper bound")
    p.add_argument("X")
    p.add_argument("Y")
    p.add_argument("function")
    p.set_defaults(func=cmd_prod_norm)

    p = sub.add_parser("classify", help="niceness classification of a triple")
    p.add_argument("space")
    p.add_argument("model")
    p.add_argument("F")
    p.add_argument("G")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run a theorem verification")
    p.add_argument("--mode", required=True,
                   choices=("multiplier", "factorization", "perfectness",
                            "examples"))
    p.add_argument("--triple", action="append", default=[],
                   help="triple name from the config (repeatable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", help="reproduce the worked examples")
    p.set_defaults(func=cmd_examples)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.func in (cmd_examples,) and args.config is None:
            cfg = RunConfig()
        else:
            if args.config is None:
                raise ConfigError("--config is required for this command")
            cfg = load_config(args.config)
        if args.seed is not None:
            cfg.seed = args.seed
        return args.func(args, cfg)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalError as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())

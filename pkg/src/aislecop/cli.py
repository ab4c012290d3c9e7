"""Command-line entry point: ``aislecop {generate,solve,validate,oracle,benchmark}``."""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .bench import emit_results, load_config, run_benchmark
from .graph import Variant, format_tour, parse_tour, validate_tour
from .instances import GenConfig, dumps_instance, gen_adversarial, gen_zipf, load_instance
from .oracles import OracleRefused, oracle_cop, oracle_cop_fr, oracle_cop_sc
from .single_column import build_tables
from .solvers import SOLVERS, solve


def _cmd_generate(args):
    if args.kind == "adversarial":
        g = gen_adversarial(args.m, args.epsilon, args.apex)
    else:
        if args.n is None:
            raise ValueError("--n is required for zipf instances")
        variant = Variant.LEFT_ONLY if args.left_only else Variant.TWO_SIDED
        g = gen_zipf(GenConfig(args.m, args.n, args.theta, args.block, args.seed, variant=variant))
    text = dumps_instance(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_solve(args):
    g = load_instance(args.instance)
    res = solve(args.algorithm, g, args.budget)
    report = validate_tour(g, res.tour, args.budget)
    print(f"algorithm={res.algorithm} reward={res.reward:g} total={g.total_reward:g} "
          f"budget_used={res.budget_used} budget_limit={res.budget_limit} valid={report.ok}")
    if args.emit_tour:
        print(format_tour(res.tour.vertices))
    if args.dump_r:
        tables = build_tables(g, args.budget)
        np.savetxt(args.dump_r, tables.R, delimiter=",", fmt="%.17g")
    return 0 if report.ok else 1


def _cmd_validate(args):
    g = load_instance(args.instance)
    status = 0
    with open(args.tour) as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                report = validate_tour(g, parse_tour(line), args.budget)
            except ValueError as exc:
                print(f"line {lineno}: FAIL parse error: {exc}")
                status = 1
                continue
            verdict = "PASS" if report.ok else "FAIL"
            print(f"line {lineno}: {verdict} cost={report.cost} reward={report.reward:g}")
            for err in report.errors:
                print(f"  {err}")
            if not report.ok:
                status = 1
    return status


def _cmd_oracle(args):
    g = load_instance(args.instance)
    fn = {"cop": oracle_cop, "fr": oracle_cop_fr, "sc": oracle_cop_sc}[args.kind]
    try:
        value = fn(g, args.budget)
    except OracleRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    print(f"{value:g}")
    return 0


def _cmd_benchmark(args):
    cfg = load_config(args.config)
    out = args.out or cfg.output

    def progress(shape, theta, seed):
        if args.verbose:
            print(f"done {shape} theta={theta} seed={seed}", file=sys.stderr)

    records = run_benchmark(cfg, progress)
    paths = emit_results(records, out)
    for name, p in paths.items():
        print(f"{name}: {p}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="aislecop", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a random or adversarial instance")
    g.add_argument("--kind", choices=["zipf", "adversarial"], default="zipf")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--theta", type=float, default=0.0)
    g.add_argument("--block", type=int, default=5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--left-only", action="store_true")
    g.add_argument("--epsilon", type=float, default=0.5)
    g.add_argument("--apex", type=float, default=None)
    g.add_argument("--out")
    g.set_defaults(func=_cmd_generate)

    s = sub.add_parser("solve", help="run one algorithm on an instance file")
    s.add_argument("--instance", required=True)
    s.add_argument("--algorithm", required=True, choices=sorted(SOLVERS))
    s.add_argument("--budget", type=int, required=True)
    s.add_argument("--emit-tour", action="store_true")
    s.add_argument("--dump-r", metavar="CSV", help="write the single-column R table as CSV")
    s.set_defaults(func=_cmd_solve)

    v = sub.add_parser("validate", help="check tours (one per line) against an instance")
    v.add_argument("--instance", required=True)
    v.add_argument("--tour", required=True)
    v.add_argument("--budget", type=int, required=True)
    v.set_defaults(func=_cmd_validate)

    o = sub.add_parser("oracle", help="brute-force optimum on a small instance")
    o.add_argument("--instance", required=True)
    o.add_argument("--budget", type=int, required=True)
    o.add_argument("--kind", choices=["cop", "fr", "sc"], default="cop")
    o.set_defaults(func=_cmd_oracle)

    b = sub.add_parser("benchmark", help="run the budget sweep from a key=value config")
    b.add_argument("--config", required=True)
    b.add_argument("--out", help="override the output directory")
    b.add_argument("-v", "--verbose", action="store_true")
    b.set_defaults(func=_cmd_benchmark)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Budget-sweep benchmark: generate, solve, validate, aggregate, emit CSV."""
from __future__ import annotations

import csv
import math
import os
import time
from collections import defaultdict
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .graph import validate_tour
from .instances import GenConfig, gen_zipf, load_instance
from .solvers import SOLVERS, solve

RAW_FIELDS = [
    "shape", "theta", "seed", "algorithm", "budget", "budget_fraction",
    "reward", "total_reward", "reward_fraction", "tour_valid",
]
AGG_FIELDS = ["shape", "theta", "budget_fraction", "algorithm", "mean", "ci95"]
TIMING_FIELDS = ["shape", "theta", "seed", "algorithm", "budget", "runtime_microseconds"]


class BenchmarkError(RuntimeError):
    pass


@dataclass(frozen=True)
class BenchmarkConfig:
    shapes: tuple[tuple[int, int], ...] = ((100, 50), (50, 100))
    thetas: tuple[float, ...] = (0.0, 0.8, 1.9, 2.7)
    seeds_per_cell: int = 30
    budget_steps: int = 20
    algorithms: tuple[str, ...] = ("ofr", "osc", "hgc", "gfr", "gpr")
    output: str = "results"
    base_seed: int = 2020
    block: int = 5
    instances: str = ""  # optional directory of instance files used instead of generation

    def __post_init__(self):
        if self.budget_steps < 2:
            raise ValueError("budget_steps must be >= 2")
        if self.seeds_per_cell < 1:
            raise ValueError("seeds_per_cell must be >= 1")
        unknown = [a for a in self.algorithms if a not in SOLVERS]
        if unknown:
            raise ValueError(f"unknown algorithms: {unknown}")


def _parse_shapes(text):
    out = []
    for tok in text.replace(",", " ").split():
        m, _, n = tok.lower().partition("x")
        out.append((int(m), int(n)))
    return tuple(out)


def _split(text):
    return [t for t in text.replace(",", " ").split() if t]


def parse_config(text: str) -> BenchmarkConfig:
    """``key = value`` lines; ``#`` starts a comment."""
    kw = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"config line {lineno}: expected key = value")
        key, value = key.strip(), value.strip()
        if key == "shapes":
            kw[key] = _parse_shapes(value)
        elif key == "thetas":
            kw[key] = tuple(float(t) for t in _split(value))
        elif key == "algorithms":
            kw[key] = tuple(_split(value))
        elif key in ("seeds_per_cell", "budget_steps", "base_seed", "block"):
            kw[key] = int(value)
        elif key in ("output", "instances"):
            kw[key] = value
        else:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
    return BenchmarkConfig(**kw)


def load_config(path) -> BenchmarkConfig:
    cfg = parse_config(Path(path).read_text())
    if cfg.output and not os.path.isabs(cfg.output):
        cfg = replace(cfg, output=str(Path(path).parent / cfg.output))
    return cfg


def budget_range(m: int, n: int) -> tuple[int, int]:
    return 2 * (n + 1), (n + 1) * m + 2 * (m - 1)


def budget_grid(m: int, n: int, steps: int) -> list[int]:
    if steps < 2:
        raise ValueError("steps must be >= 2")
    lo, hi = budget_range(m, n)
    out = []
    for b in np.rint(np.linspace(lo, hi, steps)).astype(int):
        if int(b) not in out:
            out.append(int(b))
    return out


def instance_seed(base_seed: int, m: int, n: int, theta: float, index: int) -> int:
    ss = np.random.SeedSequence(base_seed, spawn_key=(m, n, int(round(theta * 1000)), index))
    lo, hi = ss.generate_state(2, dtype=np.uint32)
    return int(lo) | (int(hi) << 32)


@dataclass(frozen=True)
class ResultRecord:
    shape: str
    theta: float
    seed: int
    algorithm: str
    budget: int
    budget_fraction: float
    reward: float
    total_reward: float
    reward_fraction: float
    tour_valid: bool
    runtime_microseconds: int = field(default=0, compare=False)


def _instances(cfg):
    if cfg.instances:
        files = sorted(p for p in Path(cfg.instances).iterdir() if p.is_file())
        for k, p in enumerate(files):
            g = load_instance(p)
            yield f"{g.m}x{g.n}", float("nan"), k, g
        return
    for m, n in cfg.shapes:
        for theta in cfg.thetas:
            for s in range(cfg.seeds_per_cell):
                seed = instance_seed(cfg.base_seed, m, n, theta, s)
                yield f"{m}x{n}", theta, seed, gen_zipf(GenConfig(m, n, theta, cfg.block, seed))


def run_benchmark(cfg: BenchmarkConfig, progress=None) -> list[ResultRecord]:
    records = []
    for shape, theta, seed, g in _instances(cfg):
        total = g.total_reward
        budgets = budget_grid(g.m, g.n, cfg.budget_steps)
        bmax = budget_range(g.m, g.n)[1]
        for budget in budgets:
            for alg in cfg.algorithms:
                t0 = time.perf_counter_ns()
                res = solve(alg, g, budget)
                elapsed = (time.perf_counter_ns() - t0) // 1000
                report = validate_tour(g, res.tour, budget)
                if not report.ok:
                    raise BenchmarkError(
                        f"invalid tour: shape={shape} theta={theta} seed={seed} "
                        f"algorithm={alg} budget={budget}: {'; '.join(report.errors)}"
                    )
                frac = report.reward / total if total > 0 else 1.0
                records.append(ResultRecord(
                    shape, theta, seed, alg, budget, budget / bmax,
                    report.reward, total, min(frac, 1.0), True, int(elapsed),
                ))
        if progress:
            progress(shape, theta, seed)
    return records


def _key(rec):
    return (rec.shape, rec.theta, rec.seed, rec.budget, rec.algorithm)


def aggregate(records) -> list[dict]:
    """Mean reward fraction and normal-approximation 95% half-width per cell."""
    groups = defaultdict(list)
    fracs = {}
    for rec in records:
        k = (rec.shape, rec.theta, rec.budget, rec.algorithm)
        groups[k].append(rec.reward_fraction)
        fracs[k] = rec.budget_fraction
    rows = []
    for k in sorted(groups, key=lambda k: (k[0], k[1], k[2], k[3])):
        vals = np.asarray(groups[k])
        mean = float(vals.mean())
        ci = 1.96 * float(vals.std(ddof=1)) / math.sqrt(vals.size) if vals.size > 1 else 0.0
        rows.append({
            "shape": k[0], "theta": k[1], "budget": k[2], "budget_fraction": fracs[k],
            "algorithm": k[3], "mean": mean, "ci95": ci,
        })
    return rows


def _cell(v):
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def emit_results(records, outdir) -> dict[str, Path]:
    """Write raw.csv, aggregate.csv (deterministic) and timings.csv (wall-clock)."""
    outdir = Path(outdir)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        recs = sorted(records, key=_key)
        paths = {name: outdir / f"{name}.csv" for name in ("raw", "aggregate", "timings")}
        with open(paths["raw"], "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(RAW_FIELDS)
            for r in recs:
                w.writerow([_cell(getattr(r, f)) for f in RAW_FIELDS])
        with open(paths["aggregate"], "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(AGG_FIELDS)
            for row in aggregate(recs):
                w.writerow([_cell(row[f]) for f in AGG_FIELDS])
        with open(paths["timings"], "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(TIMING_FIELDS)
            for r in recs:
                w.writerow([_cell(getattr(r, f)) for f in TIMING_FIELDS])
    except OSError as exc:
        raise OSError(f"cannot write results under {outdir}: {exc}") from exc
    return paths

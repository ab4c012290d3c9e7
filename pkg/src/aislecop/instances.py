"""Instance generators and the plain-text instance format.

File format::

    m n variant            # variant is two_sided or left_only
    r11 r12 ... r1n        # m lines of n non-negative rewards
    ...

Blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .graph import AisleGraph, Variant


class InstanceParseError(ValueError):
    def __init__(self, path, lineno, msg):
        super().__init__(f"{path}:{lineno}: {msg}")
        self.path, self.lineno = path, lineno


@dataclass(frozen=True)
class GenConfig:
    m: int
    n: int
    theta: float = 0.0
    block: int = 5
    seed: int = 0
    values: int = 100  # rewards are integers in [0, values)
    variant: Variant = Variant.TWO_SIDED

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be >= 1")
        if self.theta < 0:
            raise ValueError("theta must be >= 0")
        if self.block < 1:
            raise ValueError("block must be >= 1")


def zipf_pmf(theta: float, size: int = 100) -> np.ndarray:
    """P(v) proportional to (v+1)^-theta over v = 0..size-1; rank one is reward 0."""
    w = np.arange(1, size + 1, dtype=np.float64) ** -float(theta)
    return w / w.sum()


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(int(seed) & 0xFFFFFFFFFFFFFFFF))


def sample_zipf(rng: np.random.Generator, theta: float, count: int, size: int = 100) -> np.ndarray:
    cdf = np.cumsum(zipf_pmf(theta, size))
    cdf[-1] = 1.0
    u = rng.random(count)
    return np.minimum(np.searchsorted(cdf, u, side="right"), size - 1)


def gen_zipf(cfg: GenConfig) -> AisleGraph:
    """One Zipf draw per ``block x block`` tile, tiles clipped at the border."""
    bm = -(-cfg.m // cfg.block)
    bn = -(-cfg.n // cfg.block)
    vals = sample_zipf(make_rng(cfg.seed), cfg.theta, bm * bn, cfg.values).reshape(bm, bn)
    tiled = np.repeat(np.repeat(vals, cfg.block, axis=0), cfg.block, axis=1)
    return AisleGraph(tiled[: cfg.m, : cfg.n].astype(np.float64), cfg.variant)


def gen_adversarial(m: int, epsilon: float = 0.5, apex_reward: float | None = None) -> AisleGraph:
    """Square instance that separates the single-column optimum from OFr.

    Rows ``1..m-1`` hold ``2i - epsilon`` at column 2; row ``m`` holds the
    apex reward at column ``m-2`` (default ``3m - 5``).
    """
    if m < 4:
        raise ValueError("adversarial instance needs m >= 4")
    if not 0 < epsilon < 2:
        raise ValueError("epsilon must be in (0, 2)")
    apex = 3 * m - 5 if apex_reward is None else apex_reward
    r = np.zeros((m, m))
    r[: m - 1, 1] = 2 * np.arange(1, m) - epsilon
    r[m - 1, m - 3] = apex
    return AisleGraph(r, Variant.TWO_SIDED)


def adversarial_budget(m: int) -> int:
    return 2 * (m - 2) + 2 * (m - 1)


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def dumps_instance(g: AisleGraph) -> str:
    lines = [f"{g.m} {g.n} {g.variant.value}"]
    lines += [" ".join(_fmt(x) for x in row) for row in g.rewards]
    return "\n".join(lines) + "\n"


def save_instance(g: AisleGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_instance(g))


def loads_instance(text: str, path="<string>") -> AisleGraph:
    rows = []
    header = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 3:
                raise InstanceParseError(path, lineno, "header must be 'm n variant'")
            try:
                m, n = int(toks[0]), int(toks[1])
                variant = Variant(toks[2])
            except ValueError as exc:
                raise InstanceParseError(path, lineno, f"bad header: {exc}") from None
            if m < 1 or n < 1:
                raise InstanceParseError(path, lineno, "m and n must be >= 1")
            header = (m, n, variant)
            continue
        if len(toks) != header[1]:
            raise InstanceParseError(path, lineno, f"expected {header[1]} rewards, got {len(toks)}")
        try:
            vals = [float(t) for t in toks]
        except ValueError:
            raise InstanceParseError(path, lineno, "non-numeric reward") from None
        if any(not np.isfinite(v) or v < 0 for v in vals):
            raise InstanceParseError(path, lineno, "rewards must be finite and non-negative")
        if len(rows) == header[0]:
            raise InstanceParseError(path, lineno, f"more than {header[0]} reward rows")
        rows.append(vals)
    if header is None:
        raise InstanceParseError(path, 0, "empty instance file")
    if len(rows) != header[0]:
        raise InstanceParseError(path, lineno, f"expected {header[0]} reward rows, got {len(rows)}")
    return AisleGraph(np.array(rows), header[2])


def load_instance(path) -> AisleGraph:
    with open(path) as fh:
        return loads_instance(fh.read(), os.fspath(path))

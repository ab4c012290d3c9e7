"""Optimal single-column solver (OSc).

Every row is entered from column 0 and left the same way, so a solution is
a furthest row plus one detour depth per row. Tables are indexed by
half-budget ``b``: any closed walk from home on the left column has even cost.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import HOME, AisleGraph, SolveResult, Tour


class TableInconsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class DpTables:
    """``R[i-1, b]`` / ``S[i-1, b]`` for row ``i``; ``-inf`` / ``-1`` where unreachable."""

    T: np.ndarray
    R: np.ndarray
    S: np.ndarray
    half_budget: int
    mirrored: bool = False


def prefix_table(g: AisleGraph) -> np.ndarray:
    T = np.zeros((g.m, g.n + 1))
    np.cumsum(g.rewards, axis=1, out=T[:, 1:])
    return T


def build_tables(g: AisleGraph, budget: int, mirrored: bool = False) -> DpTables:
    src = g.mirrored() if mirrored else g
    T = prefix_table(src)
    bmax = max(int(budget), 0) // 2
    R, S = _kernels.osc_fill(T, bmax)
    for a in (T, R, S):
        a.setflags(write=False)
    return DpTables(T, R, S, bmax, mirrored)


def osc_reward_profile(tables: DpTables) -> np.ndarray:
    """Best reward for every half-budget ``0..b_max``."""
    return tables.R.max(axis=0)


def osc_depths(tables: DpTables) -> list[int]:
    """Trace back the detour depth of rows ``1..i*`` (0 = row not entered)."""
    R, S = tables.R, tables.S
    b = tables.half_budget
    col = R[:, b]
    top = col.max()
    last = int(np.argmax(col == top))  # shallowest furthest row among ties
    depths = [0] * (last + 1)
    for i in range(last, -1, -1):
        d = int(S[i, b])
        if d < 0 or (i > 0 and b - d - 1 < i - 1) or d > b:
            raise TableInconsistencyError(f"bad traceback entry S[{i + 1}, {b}] = {d}")
        depths[i] = d
        if i > 0:
            b -= d + 1
    got = float(tables.T[np.arange(last + 1), depths].sum())
    if not math.isclose(got, float(top), rel_tol=1e-12, abs_tol=1e-9):
        raise TableInconsistencyError(f"traceback reward {got} != table optimum {top}")
    return depths


def depths_to_walk(depths: list[int], n: int, mirrored: bool = False) -> list[tuple[int, int]]:
    """Column-0 descent with out-and-back detours, then the climb home.

    With ``mirrored`` the walk runs on column n+1 and depths count from the right.
    """
    side = n + 1 if mirrored else 0
    step = -1 if mirrored else 1
    walk = [(1, side)]
    for i, d in enumerate(depths, start=1):
        if i > 1:
            walk.append((i, side))
        out = [(i, side + step * k) for k in range(1, d + 1)]
        walk.extend(out)
        walk.extend(reversed(out[:-1]))
        if d:
            walk.append((i, side))
    walk.extend((i, side) for i in range(len(depths) - 1, 0, -1))
    return walk


def osc_traceback(tables: DpTables, g: AisleGraph) -> tuple[list[int], Tour]:
    depths = osc_depths(tables)
    return depths, Tour.of(g, depths_to_walk(depths, g.n, tables.mirrored))


def solve_osc(g: AisleGraph, budget: int, mirrored: bool = False) -> tuple[SolveResult, DpTables]:
    """Optimal walk restricted to the left column (right column if ``mirrored``).

    A mirrored tour starts and ends at ``(1, n+1)``, not at home; it only
    exists to feed the right-side depths into H2.
    """
    tables = build_tables(g, budget, mirrored)
    depths, tour = osc_traceback(tables, g)
    if not mirrored:
        assert tour.vertices[0] == HOME
    return SolveResult("osc", tour, int(budget), {"depths": depths}), tables

"""Heuristics for the general problem and greedy baselines.

H1, H2 and H3 commit to a set of full rows and then spend what is left of
the budget on out-and-back detours into partial rows (``residual_detours``).
HGc returns the best of H1, H2, H3, OFr-I and OSc. GFr and GPr are greedy
baselines picking the best reward per unit of budget from the robot's
current position while always keeping enough budget to get home.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .full_row import FullRowPlan, build_full_row_tour, row_profile, solve_ofr_i
from .graph import (
    HOME,
    AisleGraph,
    SolveResult,
    Tour,
    TourAnnotation,
    Variant,
    annotate_tour,
    home_result,
)
from .single_column import solve_osc

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class DetourPlan:
    detours: tuple[tuple[int, str, int], ...]  # (row, side, depth)
    cost: int
    gained: float


EMPTY_PLAN = DetourPlan((), 0, 0.0)


def _side_gains(g, annotation, collected):
    """Per-row prefix gains of uncollected vertices seen from each side."""
    m, n = g.m, g.n
    unc = np.array(g.rewards)
    for (i, j) in collected:
        if 1 <= j <= n:
            unc[i - 1, j - 1] = 0.0
    left = np.zeros((m, n + 1))
    right = np.zeros((m, n + 1))
    np.cumsum(unc, axis=1, out=left[:, 1:])
    np.cumsum(unc[:, ::-1], axis=1, out=right[:, 1:])
    full = np.asarray(annotation.fully_traversed)
    ok_l = np.asarray(annotation.left_on_tour) & ~full
    ok_r = np.asarray(annotation.right_on_tour) & ~full
    if g.variant is not Variant.TWO_SIDED:
        ok_r[:] = False
    return left, right, ok_l, ok_r


def residual_detours(
    g: AisleGraph, annotation: TourAnnotation, p: int, collected
) -> DetourPlan:
    """Best set of partial-row detours affordable with residual budget ``p``.

    Detours hang off side-column vertices already on the base tour. Each row
    forms one knapsack group whose levels combine a left depth ``a`` and a right
    depth ``b`` (``a + b <= n``, so the two never overlap); a level costs
    ``2(a+b)`` edges.
    """
    H = max(int(p), 0) // 2
    if H == 0:
        return EMPTY_PLAN
    left, right, ok_l, ok_r = _side_gains(g, annotation, collected)
    rows = np.flatnonzero(ok_l | ok_r)
    if rows.size == 0:
        return EMPTY_PLAN
    C = min(g.n, H)
    L = np.where(ok_l[rows, None], left[rows, : C + 1], -np.inf)
    Rt = np.where(ok_r[rows, None], right[rows, : C + 1], -np.inf)
    L[:, 0] = 0.0
    Rt[:, 0] = 0.0
    best = np.full((rows.size, C + 1), -np.inf)
    split = np.zeros((rows.size, C + 1), dtype=np.int64)
    for a in range(C + 1):
        cand = L[:, a, None] + Rt[:, : C + 1 - a]
        tail = best[:, a:]
        better = cand > tail
        tail[better] = cand[better]
        split[:, a:][better] = a
    V, choice = _kernels.group_knapsack(best, H)
    top = V[-1, H]
    if top <= 0:
        return EMPTY_PLAN
    h = int(np.argmax(V[-1] == top))  # cheapest capacity reaching the optimum
    detours = []
    for k in range(rows.size - 1, -1, -1):
        c = int(choice[k, h])
        if c:
            a = int(split[k, c])
            row = int(rows[k]) + 1
            if a:
                detours.append((row, LEFT, a))
            if c - a:
                detours.append((row, RIGHT, c - a))
            h -= c
    detours.sort()
    cost = 2 * sum(d for _, _, d in detours)
    return DetourPlan(tuple(detours), cost, float(top))


def splice_detours(g: AisleGraph, tour: Tour, plan: DetourPlan) -> Tour:
    """Insert each detour right after the first visit of its anchor vertex."""
    if not plan.detours:
        return tour
    right = g.n + 1
    pending = {}
    for row, side, depth in plan.detours:
        anchor = (row, 0) if side == LEFT else (row, right)
        step = 1 if side == LEFT else -1
        out = [(row, anchor[1] + step * k) for k in range(1, depth + 1)]
        pending[anchor] = out + out[-2::-1] + [anchor]
    walk = []
    for v in tour.vertices:
        walk.append(v)
        extra = pending.pop(v, None)
        if extra:
            walk.extend(extra)
    if pending:
        raise ValueError(f"detour anchors not on tour: {sorted(pending)}")
    return Tour.of(g, walk)


def _with_detours(g, name, tour, budget, **stats):
    ann = annotate_tour(g, tour)
    plan = residual_detours(g, ann, budget - tour.cost, set(tour.vertices))
    stats["detours"] = plan
    return SolveResult(name, splice_detours(g, tour, plan), int(budget), stats)


def solve_h1(g: AisleGraph, budget: int, base: SolveResult | None = None) -> SolveResult:
    if base is None:
        base = solve_ofr_i(g, budget)
    return _with_detours(g, "h1", base.tour, budget, base_reward=base.reward)


def _thresholds(n):
    out = []
    k = 2
    while n / k >= 1:
        out.append(n / k)
        k += 1
    if not out or out[-1] != 1:
        out.append(1)
    return out


def _padded(depths, m):
    d = np.zeros(m, dtype=np.int64)
    d[: len(depths)] = depths
    return d


def solve_h2(g: AisleGraph, budget: int, left: SolveResult | None = None) -> SolveResult:
    m, n = g.m, g.n
    if left is None:
        left, _ = solve_osc(g, budget)
    right, _ = solve_osc(g, budget, mirrored=True)
    combined = _padded(left.stats["depths"], m) + _padded(right.stats["depths"], m)
    qual = []
    used_t = None
    for t in _thresholds(n):
        qual = [i + 1 for i in range(m) if combined[i] >= t]
        used_t = t
        if len(qual) >= 2:
            break
    if len(qual) < 2:
        return _with_detours(g, "h2", Tour.home(), budget, threshold=None)
    if len(qual) % 2:
        drop = min(qual, key=lambda i: (combined[i - 1], -i))
        qual.remove(drop)
    cum = row_profile(g).cum

    def cost(rows):
        return 2 * (max(rows) - 1) + len(rows) * (n + 1) if rows else 0

    by_value = sorted(qual, key=lambda i: (cum[i - 1], -i))
    while qual and cost(qual) > budget:
        for _ in range(2):
            qual.remove(by_value.pop(0))
    if not qual:
        return _with_detours(g, "h2", Tour.home(), budget, threshold=used_t)
    tour, _ = build_full_row_tour(g, FullRowPlan(max(qual), tuple(sorted(qual))), budget)
    return _with_detours(g, "h2", tour, budget, threshold=used_t, rows=tuple(qual))


def solve_h3(g: AisleGraph, budget: int) -> SolveResult:
    n = g.n
    if budget < 2 * (n + 1):
        return home_result("h3", budget)
    far = min(g.m, (budget - 2 * (n + 1)) // 2 + 1)
    plan = FullRowPlan(far, (1, far))
    tour, _ = build_full_row_tour(g, plan, budget)
    return _with_detours(g, "h3", tour, budget, furthest=far)


def solve_hgc(g: AisleGraph, budget: int) -> SolveResult:
    ofr = solve_ofr_i(g, budget)
    osc = solve_osc(g, budget)[0]
    candidates = [
        solve_h1(g, budget, base=ofr),
        solve_h2(g, budget, left=osc),
        solve_h3(g, budget),
        ofr,
        osc,
    ]
    rank = min(range(len(candidates)), key=lambda k: (-candidates[k].reward, candidates[k].budget_used, k))
    best = candidates[rank]
    stats = {"source": best.algorithm, "candidates": {c.algorithm: c.reward for c in candidates}}
    return SolveResult("hgc", best.tour, int(budget), stats)


# --- greedy baselines -------------------------------------------------------


def _vertical(walk, col, frm, to):
    step = 1 if to > frm else -1
    walk.extend((i, col) for i in range(frm + step, to + step, step))


def _horizontal(walk, row, frm, to):
    step = 1 if to > frm else -1
    walk.extend((row, j) for j in range(frm + step, to + step, step))


def _return_home(g, walk, row, on_right, row_gain):
    """From the left column climb home; from the right cross the best row above first."""
    right = g.n + 1
    if on_right:
        y = max(range(1, row + 1), key=lambda i: (row_gain[i - 1], i))
        _vertical(walk, right, row, y)
        _horizontal(walk, y, right, 0)
        row = y
    _vertical(walk, 0, row, 1)


def solve_gfr(g: AisleGraph, budget: int) -> SolveResult:
    if g.variant is not Variant.TWO_SIDED:
        raise ValueError("GFr needs a two-sided aisle graph")
    m, n = g.m, g.n
    cum = row_profile(g).cum.copy()
    rows = np.arange(1, m + 1)
    walk = [HOME]
    row, on_right, used = 1, False, 0
    picks = []
    while True:
        cost = np.abs(rows - row) + n + 1
        ret = np.where(on_right, rows - 1, rows + n)  # robot ends on the other side
        ok = (cum > 0) & (used + cost + ret <= budget)
        if not ok.any():
            break
        ratio = np.where(ok, cum / cost, -np.inf)
        x = int(np.lexsort((rows, cost, -ratio))[0]) + 1
        _vertical(walk, n + 1 if on_right else 0, row, x)
        _horizontal(walk, x, n + 1 if on_right else 0, 0 if on_right else n + 1)
        used += int(cost[x - 1])
        cum[x - 1] = 0.0
        picks.append(x)
        row, on_right = x, not on_right
    if len(walk) == 1:
        return home_result("gfr", budget)
    _return_home(g, walk, row, on_right, cum)
    return SolveResult("gfr", Tour.of(g, walk), int(budget), {"picks": picks})


def solve_gpr(g: AisleGraph, budget: int) -> SolveResult:
    """Greedy over single target vertices.

    From the current side column the robot may go to any uncollected vertex
    and either turn around (partial row, back to the same side) or continue to
    the far side (full row). The gain is everything uncollected on the way.
    """
    if g.variant is not Variant.TWO_SIDED:
        raise ValueError("GPr needs a two-sided aisle graph")
    m, n = g.m, g.n
    unc = np.array(g.rewards)
    rows = np.arange(1, m + 1)[:, None]
    depth = np.arange(1, n + 1)[None, :]
    walk = [HOME]
    row, on_right, used = 1, False, 0
    picks = []
    while True:
        src = unc[:, ::-1] if on_right else unc
        pre = np.cumsum(src, axis=1)
        dist = np.abs(rows - row)
        ret_same = rows + n if on_right else rows - 1
        ret_other = rows - 1 if on_right else rows + n
        # option 0: partial row to each depth; option 1: full row
        gain = np.concatenate([pre, pre[:, -1:]], axis=1)
        cost = np.concatenate([dist + 2 * depth, dist + n + 1], axis=1)
        ret = np.concatenate([np.broadcast_to(ret_same, (m, n)), ret_other], axis=1)
        ok = (gain > 0) & (used + cost + ret <= budget)
        if not ok.any():
            break
        ratio = np.where(ok, gain / cost, -np.inf).ravel()
        flat_cost = cost.ravel()
        idx = np.arange(ratio.size)
        k = int(np.lexsort((idx, flat_cost, -ratio))[0])
        x, opt = divmod(k, n + 1)
        x += 1
        side = n + 1 if on_right else 0
        far = 0 if on_right else n + 1
        _vertical(walk, side, row, x)
        if opt == n:
            _horizontal(walk, x, side, far)
            unc[x - 1, :] = 0.0
            on_right = not on_right
            picks.append((x, "full"))
        else:
            d = opt + 1
            tip = n + 1 - d if on_right else d
            _horizontal(walk, x, side, tip)
            _horizontal(walk, x, tip, side)
            if on_right:
                unc[x - 1, n - d :] = 0.0
            else:
                unc[x - 1, :d] = 0.0
            picks.append((x, tip))
        used += int(flat_cost[k])
        row = x
    if len(walk) == 1:
        return home_result("gpr", budget)
    _return_home(g, walk, row, on_right, unc.sum(axis=1))
    return SolveResult("gpr", Tour.of(g, walk), int(budget), {"picks": picks})


ALGORITHMS = {
    "h1": solve_h1,
    "h2": solve_h2,
    "h3": solve_h3,
    "hgc": solve_hgc,
    "gfr": solve_gfr,
    "gpr": solve_gpr,
}

"""Optimal full-row solvers (OFr, OFr-I) and the full-row tour builder.

A full-row tour only ever crosses rows from one side column to the other.
With furthest row ``m'`` the vertical travel costs ``2(m'-1)`` and each
traversal costs ``n+1``; the number of traversals must be even so the robot
ends on the left column.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

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


class PlanInfeasibleError(ValueError):
    pass


@dataclass(frozen=True)
class RowProfile:
    cum: np.ndarray  # cum[i-1] = reward of full row i
    order: tuple[int, ...]  # 1-based rows, non-increasing cum, ties by index


@dataclass(frozen=True)
class FullRowPlan:
    furthest: int
    rows: tuple[int, ...]  # ascending, with multiplicity

    def cost(self, n: int) -> int:
        return 2 * (self.furthest - 1) + len(self.rows) * (n + 1)


def _require_two_sided(g: AisleGraph):
    if g.variant is not Variant.TWO_SIDED:
        raise ValueError("full-row solvers need a two-sided aisle graph")


def row_profile(g: AisleGraph) -> RowProfile:
    cum = g.rewards.sum(axis=1)
    order = np.argsort(-cum, kind="stable") + 1
    return RowProfile(cum, tuple(int(i) for i in order))


def permitted_rows(budget: int, n: int, furthest: int) -> int:
    """Largest even number of full rows affordable after the vertical trip."""
    residual = budget - 2 * (furthest - 1)
    if residual <= 0:
        return 0
    return 2 * (residual // (2 * (n + 1)))


def build_full_row_tour(g: AisleGraph, plan: FullRowPlan, budget: int | None = None) -> tuple[Tour, TourAnnotation]:
    """Emit the alternating-sides walk over ``plan.rows`` in ascending order."""
    rows = list(plan.rows)
    if len(rows) % 2:
        raise PlanInfeasibleError(f"odd number of traversals: {rows}")
    if rows != sorted(rows):
        raise PlanInfeasibleError("plan rows must be ascending")
    if rows and (rows[0] < 1 or rows[-1] > plan.furthest):
        raise PlanInfeasibleError(f"rows {rows} outside 1..{plan.furthest}")
    if not 1 <= plan.furthest <= g.m:
        raise PlanInfeasibleError(f"furthest row {plan.furthest} outside 1..{g.m}")
    if budget is not None and plan.cost(g.n) > budget:
        raise PlanInfeasibleError(f"plan cost {plan.cost(g.n)} exceeds budget {budget}")

    right = g.n + 1
    walk = [HOME]
    row, col = 1, 0
    for r in rows:
        walk.extend((i, col) for i in range(row + 1, r + 1))
        row = r
        if col == 0:
            walk.extend((r, j) for j in range(1, right + 1))
            col = right
        else:
            walk.extend((r, j) for j in range(right - 1, -1, -1))
            col = 0
    # even count: back on column 0; go down to the declared furthest row if needed
    walk.extend((i, 0) for i in range(row + 1, plan.furthest + 1))
    walk.extend((i, 0) for i in range(max(row, plan.furthest) - 1, 0, -1))
    tour = Tour.of(g, walk)
    return tour, annotate_tour(g, tour)


def _plan_for(rows: list[int], double: int | None = None) -> FullRowPlan:
    rows = sorted(rows + ([double] if double is not None else []))
    return FullRowPlan(max(rows) if rows else 1, tuple(rows))


def solve_ofr(g: AisleGraph, budget: int) -> SolveResult:
    """Sweep the furthest row upward, taking it plus the best rows above it."""
    _require_two_sided(g)
    prof = row_profile(g)
    cum = prof.cum
    best_val, best_cost, best_plan = -1.0, 0, None
    for mp in range(1, g.m + 1):
        k = permitted_rows(budget, g.n, mp)
        if k < 2:
            continue
        if k >= mp:
            chosen = list(range(1, mp + 1))
            val = float(cum[:mp].sum())
        else:
            chosen = [mp]
            val = float(cum[mp - 1])
            for i in prof.order:
                if len(chosen) == k:
                    break
                if i < mp:
                    chosen.append(i)
                    val += float(cum[i - 1])
        # equal reward: keep the cheaper plan so callers get more residual budget
        plan = _plan_for(chosen, mp if len(chosen) % 2 else None)
        if val > best_val or (val == best_val and plan.cost(g.n) < best_cost):
            best_val, best_cost, best_plan = val, plan.cost(g.n), plan
    if best_plan is None:
        return home_result("ofr", budget)
    tour, _ = build_full_row_tour(g, best_plan, budget)
    return SolveResult("ofr", tour, int(budget), {"plan": best_plan})


def solve_ofr_i(g: AisleGraph, budget: int) -> SolveResult:
    """Descending sweep that keeps the selected row set incrementally.

    The scan position over the sorted rows never moves backward, so the
    selection phase touches at most ``m`` positions overall; the count is
    reported as ``stats['scan_steps']``.
    """
    _require_two_sided(g)
    m, n = g.m, g.n
    prof = row_profile(g)
    cum, order = prof.cum, prof.order
    selected = np.zeros(m + 2, dtype=bool)
    val = 0.0
    j = 0  # next position in order
    steps = 0
    old = 0
    best_val, best_rows = -1.0, None

    def cost(rows):
        return _plan_for(rows, rows[-1] if len(rows) % 2 else None).cost(n)

    for mp in range(m, 0, -1):
        k = permitted_rows(budget, n, mp)
        if mp == m:
            if k >= m:
                best_val, best_rows = float(cum.sum()), list(range(1, m + 1))
                break
            while j < k:
                selected[order[j]] = True
                val += float(cum[order[j] - 1])
                j += 1
                steps += 1
            old = k
        elif mp < k:
            cand = list(range(1, mp + 1))
            cval = float(cum[:mp].sum())
            if cval > best_val or (cval == best_val and (not best_rows or cost(cand) <= cost(best_rows))):
                best_val, best_rows = cval, cand
            break
        else:
            c = 2 if k != old else 0
            if selected[mp + 1]:
                selected[mp + 1] = False
                val -= float(cum[mp])
                c += 1
            t = 0
            while t < c and j < m:
                i = order[j]
                if i <= mp:
                    selected[i] = True
                    val += float(cum[i - 1])
                    t += 1
                j += 1
                steps += 1
            old = k
        if k >= 2 and val >= best_val:
            # ties (rare) pay an O(m) cost comparison outside the scan counter
            rows = [int(i) for i in np.flatnonzero(selected)]
            if val > best_val or not best_rows or cost(rows) <= cost(best_rows):
                best_val, best_rows = val, rows

    stats = {"scan_steps": steps}
    if not best_rows:
        return home_result("ofr_i", budget, **stats)
    double = best_rows[-1] if len(best_rows) % 2 else None
    plan = _plan_for(best_rows, double)
    stats["plan"] = plan
    tour, _ = build_full_row_tour(g, plan, budget)
    return SolveResult("ofr_i", tour, int(budget), stats)

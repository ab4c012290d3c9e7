import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aislecop import AisleGraph, Tour, annotate_tour, validate_tour
from aislecop.full_row import FullRowPlan, build_full_row_tour, solve_ofr, solve_ofr_i
from aislecop.heuristics import (
    residual_detours,
    solve_gfr,
    solve_gpr,
    solve_h1,
    solve_h2,
    solve_h3,
    solve_hgc,
    splice_detours,
)
from aislecop.instances import adversarial_budget, gen_adversarial
from aislecop.oracles import oracle_cop
from aislecop.single_column import solve_osc
from aislecop.solvers import SOLVERS

from conftest import graphs


def _home_plan(g, p):
    t = Tour.home()
    return residual_detours(g, annotate_tour(g, t), p, set(t.vertices))


def test_no_residual_budget_no_detours():
    g = AisleGraph([[9, 9], [9, 9]])
    plan = _home_plan(g, 0)
    assert plan.detours == () and plan.gained == 0


def test_single_left_detour():
    g = AisleGraph([[9, 0, 0]])
    plan = _home_plan(g, 2)
    assert plan.detours == ((1, "left", 1),)
    assert plan.gained == 9 and plan.cost == 2


def _enumerate_detours(g, tour, p):
    """Try every (left depth, right depth) per eligible row; independent of the DP."""
    seen = set(tour.vertices)
    choices = []
    for i in range(1, g.m + 1):
        if all((i, j) in seen for j in range(1, g.n + 1)):
            continue
        ls = range(g.n + 1) if (i, 0) in seen else [0]
        rs = range(g.n + 1) if (i, g.n + 1) in seen else [0]
        choices.append([(i, a, b) for a in ls for b in rs])
    best = 0.0
    for combo in itertools.product(*choices):
        cost = 2 * sum(a + b for _, a, b in combo)
        if cost > p:
            continue
        got = set()
        for i, a, b in combo:
            got |= {(i, j) for j in range(1, a + 1)}
            got |= {(i, j) for j in range(g.n + 1 - b, g.n + 1)}
        best = max(best, sum(g.reward(v) for v in got - seen))
    return best


@settings(max_examples=60, deadline=None)
@given(graphs(max_m=4, max_n=3), st.integers(0, 14), st.data())
def test_detour_dp_matches_enumeration(g, p, data):
    far = data.draw(st.integers(1, g.m))
    rows = (1, far) if far > 1 else (1, 1)
    tour, ann = build_full_row_tour(g, FullRowPlan(far, rows))
    plan = residual_detours(g, ann, p, set(tour.vertices))
    assert plan.gained == _enumerate_detours(g, tour, p)
    assert plan.cost <= p
    spliced = splice_detours(g, tour, plan)
    assert validate_tour(g, spliced, tour.cost + p).ok
    assert spliced.reward == tour.reward + plan.gained


def test_h1_equals_ofr_i_without_residual():
    g = AisleGraph([[1, 1], [5, 5]])
    assert solve_h1(g, 8).reward == solve_ofr_i(g, 8).reward == 12


def test_h1_detour_needs_anchor_on_tour():
    # row 3's left column is not on the rows-{1,2} tour, so the spare 2 units buy nothing
    g = AisleGraph([[5, 5, 5, 5], [5, 5, 5, 5], [9, 0, 0, 0]])
    budget = 2 * 1 + 2 * 5 + 2
    assert solve_h1(g, budget).reward == 40
    assert oracle_cop(g, budget) == 40


def test_h1_detour_into_passed_row():
    # rows {1,3} pass row 2 on both sides; residual 2 buys v(2,1)
    g = AisleGraph([[5, 5, 5], [7, 0, 0], [5, 5, 5]])
    budget = 2 * 2 + 2 * 4 + 2
    res = solve_h1(g, budget)
    assert res.reward == 37
    assert res.reward <= oracle_cop(g, budget)


def test_h2_uniform_rewards_valid():
    g = AisleGraph(np.ones((6, 6)))
    res = solve_h2(g, 60)
    assert validate_tour(g, res.tour, 60).ok
    assert res.stats["threshold"] == 3


def test_h2_degenerate_without_qualifying_rows():
    g = AisleGraph(np.zeros((3, 3)))
    res = solve_h2(g, 20)
    assert res.stats["threshold"] is None
    assert res.reward == 0 and validate_tour(g, res.tour, 20).ok


def test_h3_minimum_budget_doubles_row_one():
    g = AisleGraph(np.arange(12, dtype=float).reshape(3, 4))
    res = solve_h3(g, 10)
    assert res.stats["furthest"] == 1
    assert res.reward == g.rewards[0].sum()


def test_h3_large_budget_reaches_last_row():
    g = AisleGraph(np.ones((5, 4)))
    budget = (g.n + 1) * g.m + 2 * (g.m - 1)
    assert solve_h3(g, budget).stats["furthest"] == g.m


def test_h3_below_threshold_is_home():
    g = AisleGraph(np.ones((3, 4)))
    assert solve_h3(g, 9).tour.vertices == ((1, 0),)


def test_single_row_greedy_baselines():
    g = AisleGraph([[3, 1, 4]])
    for algo in (solve_gfr, solve_gpr):
        res = algo(g, 8)
        assert res.reward == 8
        assert validate_tour(g, res.tour, 8).ok


def test_hgc_dominates_on_adversarial():
    for m in (10, 20):
        g = gen_adversarial(m)
        b = adversarial_budget(m)
        assert solve_hgc(g, b).reward >= solve_osc(g, b)[0].reward >= 0.5 * (m - 3) * (m - 1)


# v(m-1, 2) has reward 2m-2.5 for a detour costing m+2, a better ratio than the apex,
# so a reward-per-budget greedy never opens with the apex
@pytest.mark.xfail(reason="reward-per-budget GPr picks v(m-1, 2) before the apex", strict=True)
def test_gpr_first_pick_on_adversarial_is_apex():
    m = 10
    res = solve_gpr(gen_adversarial(m), adversarial_budget(m))
    assert res.stats["picks"][0] == (m, m - 2)


def test_hgc_not_below_ofr_on_uniform():
    g = AisleGraph(np.full((10, 10), 50.0))
    for b in (22, 60, 118):
        assert solve_hgc(g, b).reward >= solve_ofr(g, b).reward


@settings(max_examples=120, deadline=None)
@given(graphs(max_m=7, max_n=6), st.integers(0, 90))
def test_dominance_and_validity(g, budget):
    results = {name: fn(g, budget) for name, fn in SOLVERS.items()}
    for name, res in results.items():
        assert validate_tour(g, res.tour, budget).ok, name
        assert res.budget_used <= budget
    assert results["h1"].reward >= results["ofr_i"].reward == results["ofr"].reward
    top = max(results[k].reward for k in ("h1", "h2", "h3", "ofr_i", "osc"))
    assert results["hgc"].reward == top


@settings(max_examples=40, deadline=None)
@given(graphs(max_m=3, max_n=4), st.integers(0, 40))
def test_heuristics_bounded_by_oracle(g, budget):
    opt = oracle_cop(g, budget)
    for name, fn in SOLVERS.items():
        assert fn(g, budget).reward <= opt, name


@settings(max_examples=30, deadline=None)
@given(graphs(max_m=6, max_n=5))
def test_hgc_dominates_running_optimum(g):
    # the exact candidates are monotone, so HGc never falls below their best at any smaller budget
    prev = (0.0, 0.0)
    for b in range(0, 2 * (g.n + 1) * g.m + 2 * g.m):
        ofr, osc = solve_ofr_i(g, b).reward, solve_osc(g, b)[0].reward
        assert ofr >= prev[0] and osc >= prev[1]
        prev = (ofr, osc)
        assert solve_hgc(g, b).reward >= max(prev)


# B=22: H1 = rows {2,5} (11) + a detour worth 4 = 15. B=24: rows {1,2,3}
# (12) become the full-row optimum at cost 24, leaving nothing for detours.
@pytest.mark.xfail(reason="HGc reward is not monotone in the budget", strict=True)
def test_hgc_monotone_in_budget():
    g = AisleGraph([[0, 0, 0, 2], [0, 2, 2, 1], [1, 0, 2, 2], [1, 0, 0, 0], [1, 1, 2, 2], [2, 0, 2, 0]])
    vals = [solve_hgc(g, b).reward for b in range(40)]
    assert all(x <= y for x, y in zip(vals, vals[1:]))

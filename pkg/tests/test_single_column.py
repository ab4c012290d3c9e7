import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aislecop import AisleGraph, Variant, validate_tour
from aislecop.single_column import (
    DpTables,
    TableInconsistencyError,
    build_tables,
    osc_reward_profile,
    osc_traceback,
    prefix_table,
    solve_osc,
)
from aislecop.oracles import oracle_cop_sc, oracle_cop_sc_profile

from conftest import graphs

LEFT = Variant.LEFT_ONLY


def test_prefix_table():
    T = prefix_table(AisleGraph([[3, 4], [0, 0]], LEFT))
    assert T.tolist() == [[0, 3, 7], [0, 0, 0]]


def test_single_row_full_prefix():
    g = AisleGraph([[3, 4]], LEFT)
    res, tables = solve_osc(g, 4)
    assert tables.half_budget == 2
    assert res.reward == 7
    assert (1, 2) in res.tour.vertices


def test_two_rows_hand_example():
    g = AisleGraph([[1, 1], [5, 5]], LEFT)
    res, tables = solve_osc(g, 10)
    assert tables.R[1, 5] == 12
    assert res.reward == 12 == oracle_cop_sc(g, 10)
    assert res.tour.cost == 10
    depths, _ = osc_traceback(tables, g)
    assert depths == [2, 2]


def test_row_reached_with_no_spare_budget_is_zero():
    g = AisleGraph(np.full((4, 3), 5.0), LEFT)
    _, t = solve_osc(g, 20)
    for i in range(2, 5):
        assert t.R[i - 1, i - 1] == 0
        assert np.all(np.isneginf(t.R[i - 1, : i - 1]))
    assert t.R[0, 0] == 0


def test_deepest_detour_into_last_reachable_row():
    # half-budget 2 = one step down plus one step into row 2
    g = AisleGraph([[0, 0], [5, 0]], LEFT)
    assert oracle_cop_sc(g, 4) == 5
    assert solve_osc(g, 4)[0].reward == 5


def test_zero_budget():
    g = AisleGraph([[3, 4], [1, 1]], LEFT)
    res, tables = solve_osc(g, 0)
    depths, tour = osc_traceback(tables, g)
    assert depths == [0] and tour.vertices == ((1, 0),)
    assert res.reward == 0


def test_all_zero_rewards():
    g = AisleGraph(np.zeros((3, 3)), LEFT)
    res, _ = solve_osc(g, 12)
    assert res.reward == 0
    assert validate_tour(g, res.tour, 12).ok


def _recurrence_cell(T, R, i, b):
    """Direct evaluation of one table cell (0-based row i)."""
    n = T.shape[1] - 1
    if i == 0:
        return T[0, min(b, n)]
    if b < i:
        return -math.inf
    return max(R[i - 1, b - j - 1] + T[i, j] for j in range(0, min(b - i, n) + 1))


@settings(max_examples=60, deadline=None)
@given(graphs(max_m=6, max_n=5, variant=LEFT), st.integers(0, 60))
def test_table_cells_satisfy_recurrence(g, budget):
    t = build_tables(g, budget)
    for i in range(g.m):
        for b in range(t.half_budget + 1):
            assert t.R[i, b] == _recurrence_cell(t.T, t.R, i, b)
            if np.isfinite(t.R[i, b]):
                j = t.S[i, b]
                prev = 0.0 if i == 0 else t.R[i - 1, b - j - 1]
                assert prev + t.T[i, j] == t.R[i, b]


@settings(max_examples=60, deadline=None)
@given(graphs(max_m=6, max_n=5, variant=LEFT), st.integers(0, 70))
def test_table_invariants(g, budget):
    t = build_tables(g, budget)
    for i in range(g.m):
        row = t.R[i]
        finite = np.isfinite(row)
        assert np.array_equal(finite, np.arange(row.size) >= i)
        assert np.all(np.diff(row[finite]) >= 0)
    assert np.array_equal(t.R[0], t.T[0, np.minimum(np.arange(t.half_budget + 1), g.n)])


@settings(max_examples=80, deadline=None)
@given(graphs(max_m=7, max_n=5, variant=LEFT), st.integers(0, 80))
def test_matches_oracle_and_traceback(g, budget):
    res, t = solve_osc(g, budget)
    assert res.reward == oracle_cop_sc(g, budget)
    assert res.reward == t.R[:, t.half_budget].max()
    rep = validate_tour(g, res.tour, budget)
    assert rep.ok and rep.cost % 2 == 0
    depths = res.stats["depths"]
    assert sum(d + 1 for d in depths) - 1 <= t.half_budget


@settings(max_examples=40, deadline=None)
@given(graphs(max_m=6, max_n=4, variant=LEFT))
def test_profile_is_oracle_per_budget(g):
    budget = 2 * g.n * g.m + 2 * (g.m - 1)
    _, t = solve_osc(g, budget)
    prof = osc_reward_profile(t)
    assert prof[0] == 0
    assert np.all(np.diff(prof) >= 0)
    oracle = oracle_cop_sc_profile(g, budget)
    assert np.array_equal(prof, oracle[0::2][: prof.size])


@settings(max_examples=40, deadline=None)
@given(graphs(max_m=6, max_n=5, variant=LEFT))
def test_whole_graph_threshold(g):
    budget = 2 * g.n * g.m + 2 * (g.m - 1)
    assert solve_osc(g, budget)[0].reward == g.total_reward


@settings(max_examples=40, deadline=None)
@given(graphs(max_m=6, max_n=5, variant=LEFT), st.integers(0, 40))
def test_odd_budget_same_as_even(g, half):
    assert solve_osc(g, 2 * half + 1)[0].reward == solve_osc(g, 2 * half)[0].reward


@settings(max_examples=40, deadline=None)
@given(graphs(max_m=6, max_n=5, variant=LEFT), st.integers(0, 60))
def test_each_row_entered_at_most_once(g, budget):
    vs = solve_osc(g, budget)[0].tour.vertices
    entries = [vs[k][0] for k in range(1, len(vs)) if vs[k][1] == 1 and vs[k - 1][1] == 0]
    assert len(entries) == len(set(entries))


def test_two_sided_graph_uses_left_column_only():
    g = AisleGraph([[1, 2, 3], [4, 5, 6]])
    res, _ = solve_osc(g, 30)
    assert all(j <= g.n for _, j in res.tour.vertices)
    assert res.reward == g.total_reward


def test_mirrored_solves_the_right_side():
    g = AisleGraph([[0, 0, 9], [0, 0, 0]])
    left, _ = solve_osc(g, 4)
    right, _ = solve_osc(g, 4, mirrored=True)
    assert left.reward == 0
    assert right.reward == 9
    assert right.tour.vertices[0] == (1, 4) and right.tour.vertices[-1] == (1, 4)


def test_corrupt_tables_detected():
    g = AisleGraph([[1, 1], [5, 5]], LEFT)
    _, t = solve_osc(g, 10)
    S = t.S.copy()
    S[1, 5] = 0
    with pytest.raises(TableInconsistencyError):
        osc_traceback(DpTables(t.T, t.R, S, t.half_budget), g)
    S = t.S.copy()
    S[1, 5] = -1
    with pytest.raises(TableInconsistencyError):
        osc_traceback(DpTables(t.T, t.R, S, t.half_budget), g)

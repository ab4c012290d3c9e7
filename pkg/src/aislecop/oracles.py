"""Brute-force reference solvers for small instances.

These read only the raw reward matrix and re-derive the graph structure on
their own, so they share no code with the solvers they certify.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np


class OracleRefused(ValueError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_reward_vertices: int = 12
    max_budget: int = 60
    max_rows_fr: int = 20
    max_sc_vectors: int = 20_000_000


DEFAULT_LIMITS = OracleLimits()


def _shape(g):
    r = np.asarray(g.rewards, dtype=np.float64)
    two_sided = getattr(g.variant, "value", g.variant) == "two_sided"
    return r, r.shape[0], r.shape[1], two_sided


def oracle_cop_search(g, budget: int, limits: OracleLimits = DEFAULT_LIMITS):
    """Exact optimum of the general problem plus one optimal closed walk.

    Breadth-first search over (vertex, set of collected positive-reward
    vertices); every edge costs one, so BFS depth is walk cost.
    """
    r, m, n, two_sided = _shape(g)
    if m * n > limits.max_reward_vertices:
        raise OracleRefused(f"{m}x{n} exceeds {limits.max_reward_vertices} reward vertices")
    if budget > limits.max_budget:
        raise OracleRefused(f"budget {budget} exceeds {limits.max_budget}")
    last = n + 1 if two_sided else n
    sides = (0, n + 1) if two_sided else (0,)

    def adj(v):
        i, j = v
        if j in sides:
            if i > 1:
                yield (i - 1, j)
            if i < m:
                yield (i + 1, j)
        if j > 0:
            yield (i, j - 1)
        if j < last:
            yield (i, j + 1)

    bit = {}
    for i in range(m):
        for j in range(n):
            if r[i, j] > 0:
                bit[(i + 1, j + 1)] = 1 << len(bit)
    value = {}

    def mask_reward(mask):
        if mask not in value:
            value[mask] = math.fsum(r[v[0] - 1, v[1] - 1] for v, b in bit.items() if mask & b)
        return value[mask]

    home = (1, 0)
    start = (home, 0)
    parent = {start: None}
    frontier = deque([(start, 0)])
    best_mask, best_state = 0, start
    while frontier:
        state, d = frontier.popleft()
        v, mask = state
        if v == home and mask_reward(mask) > mask_reward(best_mask):
            best_mask, best_state = mask, state
        if d == budget:
            continue
        for u in adj(v):
            # shortest way home: along the row to column 0, then up
            back = (u[0] - 1) + u[1]
            if d + 1 + back > budget:
                continue
            nxt = (u, mask | bit.get(u, 0))
            if nxt not in parent:
                parent[nxt] = state
                frontier.append((nxt, d + 1))
    path = []
    s = best_state
    while s is not None:
        path.append(s[0])
        s = parent[s]
    return float(mask_reward(best_mask)), path[::-1]


def oracle_cop(g, budget: int, limits: OracleLimits = DEFAULT_LIMITS) -> float:
    return oracle_cop_search(g, budget, limits)[0]


def oracle_cop_fr(g, budget: int, limits: OracleLimits = DEFAULT_LIMITS) -> float:
    """Enumerate every row subset; an odd subset pays for one doubled row."""
    r, m, n, _ = _shape(g)
    if m > limits.max_rows_fr:
        raise OracleRefused(f"{m} rows exceeds {limits.max_rows_fr}")
    masks = np.arange(1 << m, dtype=np.int64)
    members = (masks[:, None] >> np.arange(m)) & 1
    count = members.sum(axis=1)
    furthest = np.where(count > 0, m - np.argmax(members[:, ::-1], axis=1), 1)
    traversals = count + (count % 2)
    cost = 2 * (furthest - 1) + traversals * (n + 1)
    cost[0] = 0
    reward = members @ r.sum(axis=1)
    return float(reward[cost <= budget].max())


def oracle_cop_sc_profile(g, budget: int, limits: OracleLimits = DEFAULT_LIMITS) -> np.ndarray:
    """Best single-column reward for every budget ``0..budget``.

    Enumerates the furthest row and one depth per row; depths that stop on a
    zero-reward vertex are skipped because the shallower depth dominates them.
    """
    r, m, n, _ = _shape(g)
    best = np.zeros(budget + 1)
    costs = np.zeros(1, dtype=np.int64)
    rewards = np.zeros(1)
    total = 0
    for i in range(m):
        prefix = np.concatenate([[0.0], np.cumsum(r[i])])
        depths = [0] + [j for j in range(1, n + 1) if r[i, j - 1] > 0]
        d = np.asarray(depths, dtype=np.int64)
        costs = (costs[:, None] + 2 * d[None, :]).ravel()
        rewards = (rewards[:, None] + prefix[d][None, :]).ravel()
        vertical = 2 * i
        keep = costs + vertical <= budget
        costs, rewards = costs[keep], rewards[keep]
        total += costs.size
        if total > limits.max_sc_vectors:
            raise OracleRefused(f"more than {limits.max_sc_vectors} depth vectors")
        if costs.size == 0:
            break
        np.maximum.at(best, costs + vertical, rewards)
    return np.maximum.accumulate(best)


def oracle_cop_sc(g, budget: int, limits: OracleLimits = DEFAULT_LIMITS) -> float:
    if budget < 0:
        return 0.0
    return float(oracle_cop_sc_profile(g, budget, limits)[budget])

"""Hot DP kernels with a numba path and a pure-numpy fallback.

Set ``AISLECOP_PURE_NUMPY=1`` (or run without numba installed) to select the
numpy implementations. Both paths are always importable under explicit names
so tests and ``benchmarks/bench_kernels.py`` can compare them.
"""
import os

import numpy as np

NEG_INF = -np.inf


def _env_flag(name):
    return os.environ.get(name, "").strip().lower() not in ("", "0", "false", "no")


def osc_fill_numpy(T, bmax):
    """Fill the single-column tables.

    ``T`` is the (m, n+1) prefix-reward table. Returns ``(R, S)`` of shape
    (m, bmax+1); ``R[i, b]`` is the best reward with half-budget ``b`` whose
    furthest row is ``i`` (0-based), ``S`` the chosen depth (-1 where R is -inf).
    """
    m, n1 = T.shape
    n = n1 - 1
    R = np.full((m, bmax + 1), NEG_INF)
    S = np.full((m, bmax + 1), -1, dtype=np.int64)
    for b in range(bmax + 1):
        jmax = min(b, n)
        row = T[0, : jmax + 1]
        j = int(np.argmax(row == row[-1]))
        R[0, b] = T[0, j]
        S[0, b] = j
    for i in range(1, m):
        Ri, Si = R[i], S[i]
        prev = R[i - 1]
        for j in range(n1):
            lo = i + j
            if lo > bmax:
                break
            cand = prev[i - 1 : bmax - j] + T[i, j]
            cur = Ri[lo:]
            better = cand > cur
            cur[better] = cand[better]
            Si[lo:][better] = j
    return R, S


def group_knapsack_numpy(gains, capacity):
    """Max-plus grouped knapsack: pick at most one cost level per group.

    ``gains[g, c]`` is the value of spending ``c`` units on group ``g``
    (``gains[:, 0]`` must be 0; ``-inf`` marks forbidden levels). Returns
    ``(V, choice)`` where ``V[g, h]`` is the best value of groups ``< g`` within
    ``h`` units and ``choice[g, h]`` the level chosen for group ``g``.
    """
    G, C1 = gains.shape
    V = np.zeros((G + 1, capacity + 1))
    choice = np.zeros((G, capacity + 1), dtype=np.int64)
    for g in range(G):
        prev = V[g]
        cur = V[g + 1]
        cur[:] = prev + gains[g, 0]
        for c in range(1, min(C1 - 1, capacity) + 1):
            cand = prev[: capacity + 1 - c] + gains[g, c]
            tail = cur[c:]
            better = cand > tail
            tail[better] = cand[better]
            choice[g, c:][better] = c
    return V, choice


try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

HAVE_NUMBA = numba is not None

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def osc_fill_numba(T, bmax):
        m, n1 = T.shape
        n = n1 - 1
        R = np.full((m, bmax + 1), NEG_INF)
        S = np.full((m, bmax + 1), -1, dtype=np.int64)
        for b in range(bmax + 1):
            jmax = min(b, n)
            top = T[0, jmax]
            j = 0
            while T[0, j] != top:
                j += 1
            R[0, b] = T[0, j]
            S[0, b] = j
        for i in range(1, m):
            for b in range(i, bmax + 1):
                best = NEG_INF
                arg = -1
                for j in range(min(b - i, n) + 1):
                    v = R[i - 1, b - j - 1] + T[i, j]
                    if v > best:
                        best = v
                        arg = j
                R[i, b] = best
                S[i, b] = arg
        return R, S

    @numba.njit(cache=True)
    def group_knapsack_numba(gains, capacity):
        G, C1 = gains.shape
        V = np.zeros((G + 1, capacity + 1))
        choice = np.zeros((G, capacity + 1), dtype=np.int64)
        for g in range(G):
            for h in range(capacity + 1):
                best = V[g, h] + gains[g, 0]
                arg = 0
                for c in range(1, min(C1 - 1, h) + 1):
                    v = V[g, h - c] + gains[g, c]
                    if v > best:
                        best = v
                        arg = c
                V[g + 1, h] = best
                choice[g, h] = arg
        return V, choice

else:  # pragma: no cover
    osc_fill_numba = osc_fill_numpy
    group_knapsack_numba = group_knapsack_numpy

USE_NUMBA = HAVE_NUMBA and not _env_flag("AISLECOP_PURE_NUMPY")

if USE_NUMBA:
    osc_fill = osc_fill_numba
    group_knapsack = group_knapsack_numba
else:
    osc_fill = osc_fill_numpy
    group_knapsack = group_knapsack_numpy


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"

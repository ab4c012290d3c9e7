import os
import subprocess
import sys

import numpy as np
import pytest

from aislecop import _kernels as K

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")


def _prefix(rng, m, n):
    r = rng.integers(0, 5, size=(m, n)).astype(float)
    return np.hstack([np.zeros((m, 1)), np.cumsum(r, axis=1)])


@needs_numba
@pytest.mark.parametrize("m, n, bmax", [(1, 1, 0), (1, 3, 5), (4, 3, 2), (6, 5, 30), (12, 7, 90)])
def test_osc_fill_backends_agree(rng, m, n, bmax):
    T = _prefix(rng, m, n)
    R1, S1 = K.osc_fill_numpy(T, bmax)
    R2, S2 = K.osc_fill_numba(T, bmax)
    np.testing.assert_array_equal(R1, R2)
    np.testing.assert_array_equal(S1, S2)


@needs_numba
@pytest.mark.parametrize("groups, width, cap", [(0, 3, 5), (1, 1, 0), (3, 4, 6), (8, 6, 40)])
def test_group_knapsack_backends_agree(rng, groups, width, cap):
    gains = rng.integers(0, 9, size=(groups, width)).astype(float)
    gains[:, 0] = 0.0
    V1, C1 = K.group_knapsack_numpy(gains, cap)
    V2, C2 = K.group_knapsack_numba(gains, cap)
    np.testing.assert_array_equal(V1, V2)
    np.testing.assert_array_equal(C1, C2)


def test_group_knapsack_small_case():
    # group k: cost c gives gains[k, c]
    gains = np.array([[0.0, 3.0, 4.0], [0.0, 1.0, 5.0]])
    V, _ = K.group_knapsack_numpy(gains, 3)
    assert V[-1].max() == 8.0  # 3 (cost 1) + 5 (cost 2)
    assert V[-1][2] == 5.0


def test_env_flag_selects_numpy():
    env = dict(os.environ, AISLECOP_PURE_NUMPY="1")
    out = subprocess.run(
        [sys.executable, "-c", "from aislecop import _kernels as K; print(K.backend())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"

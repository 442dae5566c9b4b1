import os
import subprocess
import sys

import numpy as np
import pytest

from nilorder import kernel
from nilorder.harness.catalog import build
from nilorder.harness.rows import element_pair_rows
from nilorder.kernel import COL, NCOLS, pair_rows, table_pair_rows

compiled = pytest.mark.skipif(kernel.BACKEND != "compiled", reason="extension not built")


def _all_pairs(N):
    return np.repeat(np.arange(N), N), np.tile(np.arange(N), N)


def test_table_basics(d4):
    t = d4.table()
    assert t.size == 8 and t.exponent == 4
    assert (t.mul[0] == np.arange(8)).all()
    assert (t.mul[np.arange(8), t.inv] == 0).all()
    assert sorted(t.orders.tolist()) == [1, 2, 2, 2, 2, 2, 4, 4]


@pytest.mark.parametrize("name", ["D4", "heis3", "S4", "dih16", "S3xZ4", "z4xz6"])
def test_python_kernel_matches_element_rows(name):
    G = build(name)
    a, b = _all_pairs(G.order)
    rows = pair_rows(G.table(), a, b, backend="python")
    assert rows.shape == (G.order ** 2, NCOLS)
    assert (rows == element_pair_rows(G, a, b)).all()


@compiled
@pytest.mark.parametrize("name", ["D4", "Q8xheis3", "ut4_2", "S4", "heis9"])
def test_compiled_matches_python(name):
    t = build(name).table()
    N = t.size
    if N > 300:
        rng = np.random.default_rng(0)
        a, b = rng.integers(0, N, 20000), rng.integers(0, N, 20000)
    else:
        a, b = _all_pairs(N)
    assert (pair_rows(t, a, b, backend="compiled") == pair_rows(t, a, b, backend="python")).all()


def test_row_values_d4(d4, rs):
    r, s = rs
    i, j = d4.index[r], d4.index[s]
    row = table_pair_rows(d4.table())[i * 8 + j]
    assert row[COL["m"]] == 4 and row[COL["n"]] == 2
    assert row[COL["mo"]] == 4 and row[COL["oab"]] == 2
    assert row[COL["r"]] == 2 and row[COL["witness"]] == 1
    assert row[COL["commutes"]] == 0


def test_pure_backend_selected_by_environment():
    env = dict(os.environ, NILORDER_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from nilorder import kernel; print(kernel.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"

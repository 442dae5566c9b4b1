"""Unitriangular codes, the table-free kernel and conjugation-orbit sweeps."""

import numpy as np
import pytest

from nilorder import kernel
from nilorder.codes import CodeOps, TableOps, UnitriCodec, codec_for
from nilorder.elements import unitriangular
from nilorder.harness.catalog import build
from nilorder.harness.checks import identity_failures
from nilorder.harness.orbits import PairOrbits, orbit_labels
from nilorder.harness.sweep import distinct_rows, sweep

compiled = pytest.mark.skipif(kernel.BACKEND != "compiled", reason="compiled kernel not built")


def _codes(G):
    c = codec_for(G)
    return c, np.array([c.encode(x) for x in G.elements], dtype=np.int64)


@pytest.mark.parametrize("dim,q", [(3, 5), (4, 3), (5, 9)])
def test_codec_roundtrip_and_product(dim, q):
    c = UnitriCodec(dim, q)
    rng = np.random.default_rng(dim * q)
    X = rng.integers(0, c.size, size=50)
    Y = rng.integers(0, c.size, size=50)
    prod = c.mul(X, Y)
    for x, y, z in zip(X.tolist(), Y.tolist(), prod.tolist()):
        assert c.encode(c.decode(x)) == x
        assert c.decode(z) == c.decode(x) * c.decode(y)
    assert c.encode(unitriangular([1 if i % (dim + 1) == 0 else 0 for i in range(dim * dim)], dim, q)) == 0


def test_codec_power_matches_elements():
    c = UnitriCodec(3, 27)
    x = c.decode(12345)
    for k in (0, 1, 5, 26, 27, 100):
        assert c.decode(int(c.pow(np.int64(12345), k))) == x ** k


def test_codec_only_for_unitriangular_groups():
    assert codec_for(build("S4")) is None
    assert codec_for(build("heis9")) == UnitriCodec(3, 9)


@pytest.mark.parametrize("name", ["heis3", "heis4", "ut4_2"])
def test_python_unitri_kernel_matches_table(name):
    G = build(name)
    c, codes = _codes(G)
    rng = np.random.default_rng(7)
    a = rng.integers(0, G.order, size=150)
    b = rng.integers(0, G.order, size=150)
    want = kernel.pair_rows(G.table(), a, b, backend="python")
    got = kernel.unitri_pair_rows(c, G.exponent, codes[a], codes[b], backend="python")
    assert np.array_equal(got, want)


@compiled
@pytest.mark.parametrize("name", ["heis3", "heis9", "ut4_2", "ut4_3", "heis4"])
def test_compiled_unitri_kernel_matches_table(name):
    G = build(name)
    c, codes = _codes(G)
    rng = np.random.default_rng(11)
    a = rng.integers(0, G.order, size=5000)
    b = rng.integers(0, G.order, size=5000)
    want = kernel.pair_rows(G.table(), a, b)
    got = kernel.unitri_pair_rows(c, G.exponent, codes[a], codes[b])
    assert np.array_equal(got, want)
    mo = kernel.unitri_mutual_orders(c, G.exponent, codes[a], codes[b])
    assert np.array_equal(mo, want[:, kernel.COL["mo"]])


def test_orbit_labels_are_orbit_minima():
    # two cycles (0 3 5) (1 4) and a fixed point 2
    p = np.array([3, 4, 2, 5, 1, 0])
    assert orbit_labels([p], 6).tolist() == [0, 1, 2, 0, 1, 0]


@pytest.mark.parametrize("name", ["D4", "S4", "heis3", "dih16", "S3xZ4"])
def test_pair_orbits_partition_matches_brute_force(name):
    G = build(name)
    t = G.table()
    N = G.order
    a_idx, b_idx, w = PairOrbits(G, np.arange(N), TableOps(t), lambda x: x).enumerate()
    assert int(w.sum()) == N * N
    conj = t.mul[t.mul[t.inv[:, None], np.arange(N)[None, :]], np.arange(N)[:, None]]

    def orbit(a, b):
        # conj[g, x] = g^-1 x g
        return frozenset(zip(conj[:, a].tolist(), conj[:, b].tolist()))

    total = {}
    for a, b, k in zip(a_idx.tolist(), b_idx.tolist(), w.tolist()):
        o = orbit(a, b)
        total[o] = total.get(o, 0) + k
    assert all(len(o) == k for o, k in total.items())
    assert sum(total.values()) == N * N


@pytest.mark.parametrize("name", ["D4", "S4", "dih16", "heis9", "ut4_3", "Q8xheis3"])
def test_orbit_sweep_agrees_with_exhaustive(name):
    G = build(name)
    full = sweep(G)
    reduced = sweep(G, mode="orbits")
    assert full.mode == "exhaustive" and reduced.mode.startswith("orbits(")
    assert reduced.pairs_checked == full.pairs_checked == G.order ** 2
    assert reduced.ratio_counts == full.ratio_counts
    assert reduced.checks == full.checks
    assert reduced.ok and full.ok


def test_sampled_mode_and_mode_validation():
    from nilorder.errors import ConfigurationError

    G = build("heis5")
    rep = sweep(G, checks=["sandwich"], mode="sampled", sample=100)
    assert rep.mode == "sampled(100)" and rep.pairs_checked == 100
    with pytest.raises(ConfigurationError):
        sweep(G, mode="bogus")
    with pytest.raises(ConfigurationError):
        sweep(build("heis27"), mode="exhaustive")


def test_identity_failures_agree_between_table_and_codes():
    G = build("heis9")
    c, codes = _codes(G)
    rng = np.random.default_rng(3)
    a = rng.integers(0, G.order, size=300)
    b = rng.integers(0, G.order, size=300)
    E = G.exponent
    assert not identity_failures(TableOps(G.table()), a, b, E, E).any()
    assert not identity_failures(CodeOps(c, E), codes[a], codes[b], E, E).any()
    # the identities fail in a class-3 group
    H = build("ut4_2")
    A = np.repeat(np.arange(H.order), H.order)
    B = np.tile(np.arange(H.order), H.order)
    assert identity_failures(TableOps(H.table()), A, B, H.exponent, H.exponent).any()


def test_distinct_rows_matches_numpy():
    rng = np.random.default_rng(5)
    rows = rng.integers(0, 4, size=(5000, 6))
    u, inv = distinct_rows(rows)
    U, I = np.unique(rows, axis=0, return_inverse=True)
    assert np.array_equal(u, U) and np.array_equal(inv, I.reshape(-1))


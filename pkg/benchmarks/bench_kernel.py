"""Compare the compiled pair kernels with the pure-Python fallback.

Usage: python benchmarks/bench_kernel.py [--pairs N] [--groups heis9,ut4_3,...]

For each group the same random pairs go through both backends; the rows
must agree, and the per-pair time and the speedup are printed as TSV.
Groups with a table use the table kernel, larger unitriangular groups the
arithmetic kernel on integer codes.
"""

import argparse
import sys
import time

import numpy as np

from nilorder import kernel
from nilorder.codes import codec_for
from nilorder.harness.catalog import EXHAUSTIVE_LIMIT, build


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def bench(name, pairs, seed=0):
    G = build(name)
    rng = np.random.default_rng(seed)
    a = rng.integers(0, G.order, size=pairs)
    b = rng.integers(0, G.order, size=pairs)
    if G.order <= EXHAUSTIVE_LIMIT:
        table = G.table()
        kind = "table"

        def run(backend, n):
            return kernel.pair_rows(table, a[:n], b[:n], backend=backend)
    else:
        codec = codec_for(G)
        codes = np.array([codec.encode(x) for x in G.elements], dtype=np.int64)
        exponent = G.exponent
        kind = "unitri"

        def run(backend, n):
            return kernel.unitri_pair_rows(codec, exponent, codes[a[:n]], codes[b[:n]], backend=backend)

    # the pure kernel is slow; time it on a prefix of the same pairs
    slow_n = min(pairs, 2000)
    fast, t_fast = _timed(lambda: run("compiled", pairs))
    slow, t_slow = _timed(lambda: run("python", slow_n))
    if not np.array_equal(fast[:slow_n], slow):
        raise SystemExit(f"{name}: backends disagree")
    us_fast = t_fast / pairs * 1e6
    us_slow = t_slow / slow_n * 1e6
    return kind, us_fast, us_slow


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--pairs", type=int, default=200_000)
    p.add_argument("--groups", default="D4,S4,heis9,ut4_3,Q8xheis3,heis27")
    args = p.parse_args(argv)
    if kernel.BACKEND != "compiled":
        print("compiled kernel not available; build it with pip install -e .", file=sys.stderr)
        return 2
    print("group\tkernel\tcompiled_us_per_pair\tpython_us_per_pair\tspeedup")
    for name in args.groups.split(","):
        kind, fast, slow = bench(name, args.pairs)
        print(f"{name}\t{kind}\t{fast:.3f}\t{slow:.1f}\t{slow / fast:.0f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Pure-Python pair kernel; same contract as the compiled ``_kernel`` extension."""

from math import gcd

import numpy as np

from .kernel_columns import NCOLS


def pair_rows(mul, inv, orders, powers, exponent, a_idx, b_idx):
    mul = mul.tolist()
    inv = inv.tolist()
    orders = orders.tolist()
    powers = powers.tolist()
    E = int(exponent)
    out = np.zeros((len(a_idx), NCOLS), dtype=np.int64)
    rows = []
    for a, b in zip(a_idx.tolist(), b_idx.tolist()):
        rows.append(_row(mul, inv, orders, powers, E, a, b))
    if rows:
        out[:] = rows
    return out


def _row(mul, inv, orders, P, E, a, b):
    pa, pb = P[a], P[b]
    ma, mb = mul[a], mul[b]
    m, n = orders[a], orders[b]
    ab = ma[b]
    oab = orders[ab]
    g = gcd(m, n)
    L = m // g * n

    mo = L
    for N in range(1, L + 1):
        if L % N == 0 and mul[pa[N % E]][pb[N % E]] == 0:
            mo = N
            break

    e = 1
    for d in range(g, 0, -1):
        if g % d:
            continue
        x = pa[(m // d) % E]
        step = n // d
        if any(pb[(step * j) % E] == x for j in range(d)):
            e = d
            break
    v = 1
    if e > 1:
        target = pb[(n // e) % E]
        base = m // e
        for v in range(1, e + 1):
            if pa[(base * v) % E] == target:
                break

    ia, ib = inv[a], inv[b]
    c = mul[mul[mul[ib][ia]][b]][a]
    r = orders[c]
    comm_ab = mul[mul[mul[ia][ib]][a]][b]

    ce_ab = ce_ba = 0
    cen_ab = cen_ba = 0
    for i in range(m):
        x = pa[i]
        if mul[x][b] == mb[x]:
            cen_ab += 1
            if ce_ab == 0 and i > 0:
                ce_ab = i
    if ce_ab == 0:
        ce_ab = m
    for j in range(n):
        y = pb[j]
        if mul[y][a] == ma[y]:
            cen_ba += 1
            if ce_ba == 0 and j > 0:
                ce_ba = j
    if ce_ba == 0:
        ce_ba = n

    pc = P[c]
    x = mul[pa[r % E]][pb[r % E]]
    ox = orders[x]
    binom = r * (r - 1) // 2
    oxy = orders[mul[x][pc[binom % E]]]
    witness = 0
    if r % 2 == 0 and mo % 2 == 0:
        h = mul[pa[(mo // 2) % E]][pb[(mo // 2) % E]]
        witness = 1 if h == pc[(r // 2) % E] else 0
    commutes = 1 if ab == mb[a] else 0
    return (m, n, oab, mo, e, v, r, ce_ab, ce_ba, cen_ab, cen_ba, ox, oxy,
            witness, orders[comm_ab], commutes)


class _CodedViews:
    """Lazy stand-ins for the dense tables, computing on unitriangular codes.

    Lets the table row routine above run unchanged on coded elements, which
    makes this the reference for the compiled arithmetic kernel.
    """

    def __init__(self, codec, exponent):
        self.codec = codec
        self.E = exponent

    def mul1(self, x, y):
        return int(self.codec.mul(np.int64(x), np.int64(y)))

    def powers(self, x):
        out = [0]
        for _ in range(1, self.E):
            out.append(self.mul1(out[-1], x))
        return out

    def order(self, x):
        p = self.powers(x)
        return next((i for i in range(1, self.E) if p[i] == 0), self.E)


class _Lazy:
    def __init__(self, fn):
        self.fn = fn
        self.cache = {}

    def __getitem__(self, x):
        if x not in self.cache:
            self.cache[x] = self.fn(x)
        return self.cache[x]


def unitri_pair_rows(codec, exponent, a_codes, b_codes):
    views = _CodedViews(codec, int(exponent))
    P = _Lazy(views.powers)
    mul = _Lazy(lambda x: _Lazy(lambda y: views.mul1(x, y)))
    orders = _Lazy(views.order)
    inv = _Lazy(lambda x: P[x][orders[x] - 1])
    out = np.zeros((len(a_codes), NCOLS), dtype=np.int64)
    for k, (a, b) in enumerate(zip(np.asarray(a_codes).tolist(), np.asarray(b_codes).tolist())):
        out[k] = _row(mul, inv, orders, P, views.E, a, b)
    return out


def unitri_mutual_orders(codec, exponent, a_codes, b_codes):
    return unitri_pair_rows(codec, exponent, a_codes, b_codes)[:, 3].copy()

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled pair kernel. Mirrors ``_pykernel.pair_rows`` exactly."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef int NCOLS = 16


cdef inline long _gcd(long a, long b) noexcept nogil:
    cdef long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef void _row(const int[:, ::1] mul, const int[::1] inv, const int[::1] orders,
               const int[:, ::1] P, long E, long a, long b,
               long[:, ::1] out, Py_ssize_t row) noexcept nogil:
    cdef long m = orders[a], n = orders[b]
    cdef long ab = mul[a, b]
    cdef long g = _gcd(m, n)
    cdef long L = m / g * n
    cdef long mo = L, N, d, j, x, y, step, e = 1, v = 1, target, base
    cdef bint found
    for N in range(1, L + 1):
        if L % N == 0 and mul[P[a, N % E], P[b, N % E]] == 0:
            mo = N
            break

    d = g
    while d >= 1:
        if g % d == 0:
            x = P[a, (m / d) % E]
            step = n / d
            found = False
            for j in range(d):
                if P[b, (step * j) % E] == x:
                    found = True
                    break
            if found:
                e = d
                break
        d -= 1
    if e > 1:
        target = P[b, (n / e) % E]
        base = m / e
        for v in range(1, e + 1):
            if P[a, (base * v) % E] == target:
                break

    cdef long ia = inv[a], ib = inv[b]
    cdef long c = mul[mul[mul[ib, ia], b], a]
    cdef long r = orders[c]
    cdef long comm_ab = mul[mul[mul[ia, ib], a], b]

    cdef long ce_ab = 0, ce_ba = 0, cen_ab = 0, cen_ba = 0, i
    for i in range(m):
        x = P[a, i]
        if mul[x, b] == mul[b, x]:
            cen_ab += 1
            if ce_ab == 0 and i > 0:
                ce_ab = i
    if ce_ab == 0:
        ce_ab = m
    for i in range(n):
        y = P[b, i]
        if mul[y, a] == mul[a, y]:
            cen_ba += 1
            if ce_ba == 0 and i > 0:
                ce_ba = i
    if ce_ba == 0:
        ce_ba = n

    x = mul[P[a, r % E], P[b, r % E]]
    cdef long ox = orders[x]
    cdef long binom = r * (r - 1) / 2
    cdef long oxy = orders[mul[x, P[c, binom % E]]]
    cdef long witness = 0, h
    if r % 2 == 0 and mo % 2 == 0:
        h = mul[P[a, (mo / 2) % E], P[b, (mo / 2) % E]]
        if h == P[c, (r / 2) % E]:
            witness = 1

    out[row, 0] = m
    out[row, 1] = n
    out[row, 2] = orders[ab]
    out[row, 3] = mo
    out[row, 4] = e
    out[row, 5] = v
    out[row, 6] = r
    out[row, 7] = ce_ab
    out[row, 8] = ce_ba
    out[row, 9] = cen_ab
    out[row, 10] = cen_ba
    out[row, 11] = ox
    out[row, 12] = oxy
    out[row, 13] = witness
    out[row, 14] = orders[comm_ab]
    out[row, 15] = 1 if ab == mul[b, a] else 0


def pair_rows(mul, inv, orders, powers, exponent, a_idx, b_idx):
    cdef const int[:, ::1] mul_v = np.ascontiguousarray(mul, dtype=np.int32)
    cdef const int[::1] inv_v = np.ascontiguousarray(inv, dtype=np.int32)
    cdef const int[::1] ord_v = np.ascontiguousarray(orders, dtype=np.int32)
    cdef const int[:, ::1] pw_v = np.ascontiguousarray(powers, dtype=np.int32)
    cdef const long[::1] av = np.ascontiguousarray(a_idx, dtype=np.int64)
    cdef const long[::1] bv = np.ascontiguousarray(b_idx, dtype=np.int64)
    cdef Py_ssize_t k, npairs = av.shape[0]
    cdef long E = exponent
    result = np.zeros((npairs, NCOLS), dtype=np.int64)
    cdef long[:, ::1] out = result
    with nogil:
        for k in range(npairs):
            _row(mul_v, inv_v, ord_v, pw_v, E, av[k], bv[k], out, k)
    return result


# -- unitriangular groups by arithmetic on integer codes -----------------------
#
# An element of UT(d, Z/q) is coded as sum_t digit_t * q^t over its strictly
# upper entries in row-major order; the identity is code 0.

from libc.stdlib cimport malloc, free

cdef enum:
    MAXD = 8
    MAXK = 28
    MAXP = 16


cdef struct Arith:
    long q
    int d
    int k
    long E
    long weights[MAXK]
    # product terms of slot t: digits tl[t][i] of x times tr[t][i] of y
    int nterms[MAXK]
    int tl[MAXK][MAXD]
    int tr[MAXK][MAXD]
    int nprimes
    long primes[MAXP]
    const int* dig


cdef int _setup(Arith* A, long q, int d, long E, const int* dig) except -1:
    cdef int i, j, l, t = 0
    cdef int pos[MAXD][MAXD]
    cdef long w = 1, x = E, p = 2
    if d > MAXD:
        raise ValueError(f"dimension {d} exceeds {MAXD}")
    A.q = q
    A.d = d
    A.E = E
    A.dig = dig
    for i in range(d):
        for j in range(i + 1, d):
            pos[i][j] = t
            A.weights[t] = w
            w *= q
            t += 1
    A.k = t
    for i in range(d):
        for j in range(i + 1, d):
            t = pos[i][j]
            A.nterms[t] = 0
            for l in range(i + 1, j):
                A.tl[t][A.nterms[t]] = pos[i][l]
                A.tr[t][A.nterms[t]] = pos[l][j]
                A.nterms[t] += 1
    A.nprimes = 0
    while p * p <= x:
        if x % p == 0:
            A.primes[A.nprimes] = p
            A.nprimes += 1
            while x % p == 0:
                x //= p
        p += 1
    if x > 1:
        A.primes[A.nprimes] = x
        A.nprimes += 1
    return 0


cdef inline long _umul(Arith* A, long x, long y) noexcept nogil:
    cdef long dx[MAXK]
    cdef long dy[MAXK]
    cdef long q = A.q, s, out = 0
    cdef int t, i, k = A.k
    cdef const int* px
    cdef const int* py
    if A.dig != NULL:
        px = A.dig + x * k
        py = A.dig + y * k
        for t in range(k):
            dx[t] = px[t]
            dy[t] = py[t]
    else:
        for t in range(k):
            dx[t] = x % q
            x = x / q
            dy[t] = y % q
            y = y / q
    for t in range(k):
        s = dx[t] + dy[t]
        for i in range(A.nterms[t]):
            s += dx[A.tl[t][i]] * dy[A.tr[t][i]]
        if A.nterms[t]:
            s = s % q
        elif s >= q:
            s -= q
        out += s * A.weights[t]
    return out


cdef inline long _upow(Arith* A, long x, long k) noexcept nogil:
    cdef long out = 0
    while k:
        if k & 1:
            out = _umul(A, out, x)
        k >>= 1
        if k:
            x = _umul(A, x, x)
    return out


cdef inline long _uorder(Arith* A, long x) noexcept nogil:
    cdef long o = A.E, p
    cdef int t
    if x == 0:
        return 1
    for t in range(A.nprimes):
        p = A.primes[t]
        while o % p == 0 and _upow(A, x, o / p) == 0:
            o = o / p
    return o


cdef inline long _umutual(Arith* A, long* pa, long* pb, long m, long n) noexcept nogil:
    cdef long L = m / _gcd(m, n) * n, N, E = A.E
    for N in range(1, L + 1):
        if L % N == 0 and _umul(A, pa[N % E], pb[N % E]) == 0:
            return N
    return L


cdef inline long _fill_powers(Arith* A, long x, long* px) noexcept nogil:
    """Write x^0 .. x^(E-1) into px; return the order of x."""
    cdef long i, o = 0
    px[0] = 0
    for i in range(1, A.E):
        px[i] = _umul(A, px[i - 1], x)
        if o == 0 and px[i] == 0:
            o = i
    return o if o else A.E


cdef void _urow(Arith* A, long a, long b, long* pa, long* pb,
                long[:, ::1] out, Py_ssize_t row) noexcept nogil:
    cdef long E = A.E
    cdef long m = _fill_powers(A, a, pa)
    cdef long n = _fill_powers(A, b, pb)
    cdef long ab = _umul(A, a, b)
    cdef long g = _gcd(m, n)
    cdef long mo = _umutual(A, pa, pb, m, n)
    cdef long d, j, x, y, step, e = 1, v = 1, target, base
    cdef bint found

    d = g
    while d >= 1:
        if g % d == 0:
            x = pa[(m / d) % E]
            step = n / d
            found = False
            for j in range(d):
                if pb[(step * j) % E] == x:
                    found = True
                    break
            if found:
                e = d
                break
        d -= 1
    if e > 1:
        target = pb[(n / e) % E]
        base = m / e
        for v in range(1, e + 1):
            if pa[(base * v) % E] == target:
                break

    cdef long ia = pa[m - 1], ib = pb[n - 1]
    cdef long c = _umul(A, _umul(A, _umul(A, ib, ia), b), a)
    cdef long r = _uorder(A, c)
    cdef long comm_ab = _umul(A, _umul(A, _umul(A, ia, ib), a), b)

    cdef long ce_ab = 0, ce_ba = 0, cen_ab = 0, cen_ba = 0, i
    for i in range(m):
        x = pa[i]
        if _umul(A, x, b) == _umul(A, b, x):
            cen_ab += 1
            if ce_ab == 0 and i > 0:
                ce_ab = i
    if ce_ab == 0:
        ce_ab = m
    for i in range(n):
        y = pb[i]
        if _umul(A, y, a) == _umul(A, a, y):
            cen_ba += 1
            if ce_ba == 0 and i > 0:
                ce_ba = i
    if ce_ba == 0:
        ce_ba = n

    x = _umul(A, pa[r % E], pb[r % E])
    cdef long ox = _uorder(A, x)
    cdef long binom = r * (r - 1) / 2
    cdef long oxy = _uorder(A, _umul(A, x, _upow(A, c, binom % E)))
    cdef long witness = 0, h
    if r % 2 == 0 and mo % 2 == 0:
        h = _umul(A, pa[(mo / 2) % E], pb[(mo / 2) % E])
        if h == _upow(A, c, (r / 2) % E):
            witness = 1

    out[row, 0] = m
    out[row, 1] = n
    out[row, 2] = _uorder(A, ab)
    out[row, 3] = mo
    out[row, 4] = e
    out[row, 5] = v
    out[row, 6] = r
    out[row, 7] = ce_ab
    out[row, 8] = ce_ba
    out[row, 9] = cen_ab
    out[row, 10] = cen_ba
    out[row, 11] = ox
    out[row, 12] = oxy
    out[row, 13] = witness
    out[row, 14] = _uorder(A, comm_ab)
    out[row, 15] = 1 if ab == _umul(A, b, a) else 0


# digit tables are used when q^(number of upper entries) is at most this
DIGIT_TABLE_LIMIT = 1 << 21


cdef object _digit_table(long q, int d):
    cdef long k = d * (d - 1) // 2
    if q ** k > DIGIT_TABLE_LIMIT:
        return None
    codes = np.arange(q ** k, dtype=np.int64)
    return np.ascontiguousarray(
        (codes[:, None] // (q ** np.arange(k, dtype=np.int64))) % q, dtype=np.int32
    )


def unitri_pair_rows(long q, int d, long exponent, a_codes, b_codes):
    """Rows for pairs of unitriangular elements given by integer codes."""
    cdef Arith A
    cdef const int[:, ::1] dv
    dig = _digit_table(q, d)
    if dig is None:
        _setup(&A, q, d, exponent, NULL)
    else:
        dv = dig
        _setup(&A, q, d, exponent, &dv[0, 0])
    cdef const long[::1] av = np.ascontiguousarray(a_codes, dtype=np.int64)
    cdef const long[::1] bv = np.ascontiguousarray(b_codes, dtype=np.int64)
    cdef Py_ssize_t k, npairs = av.shape[0]
    result = np.zeros((npairs, NCOLS), dtype=np.int64)
    cdef long[:, ::1] out = result
    cdef long* pa = <long*> malloc(exponent * sizeof(long))
    cdef long* pb = <long*> malloc(exponent * sizeof(long))
    if pa == NULL or pb == NULL:
        free(pa)
        free(pb)
        raise MemoryError()
    try:
        with nogil:
            for k in range(npairs):
                _urow(&A, av[k], bv[k], pa, pb, out, k)
    finally:
        free(pa)
        free(pb)
    return result


def unitri_mutual_orders(long q, int d, long exponent, a_codes, b_codes):
    """o(a, b) alone for coded pairs."""
    cdef Arith A
    cdef const int[:, ::1] dv
    dig = _digit_table(q, d)
    if dig is None:
        _setup(&A, q, d, exponent, NULL)
    else:
        dv = dig
        _setup(&A, q, d, exponent, &dv[0, 0])
    cdef const long[::1] av = np.ascontiguousarray(a_codes, dtype=np.int64)
    cdef const long[::1] bv = np.ascontiguousarray(b_codes, dtype=np.int64)
    cdef Py_ssize_t k, npairs = av.shape[0]
    result = np.zeros(npairs, dtype=np.int64)
    cdef long[::1] out = result
    cdef long m, n
    cdef long* pa = <long*> malloc(exponent * sizeof(long))
    cdef long* pb = <long*> malloc(exponent * sizeof(long))
    if pa == NULL or pb == NULL:
        free(pa)
        free(pb)
        raise MemoryError()
    try:
        with nogil:
            for k in range(npairs):
                m = _fill_powers(&A, av[k], pa)
                n = _fill_powers(&A, bv[k], pb)
                out[k] = _umutual(&A, pa, pb, m, n)
    finally:
        free(pa)
        free(pb)
    return result

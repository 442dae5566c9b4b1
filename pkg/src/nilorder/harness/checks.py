"""Verification checks, one per proven statement, evaluated on per-pair rows.

Row checks receive a dict of the kernel columns for one pair and return a
failure message or ``None``. Pair checks receive the sweep's
``PairSpace`` and return ``(pair position, message)`` failures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable

import numpy as np

from ..class2 import PREDICTED, case_ladder
from ..elements import element_order
from ..hall.basis import formal_commutators
from ..hall.constants import constant_a, prime_factors
from ..kernel_columns import COL
from ..order import closed_form_value, jungnickel_d

ANY, NILPOTENT, ABELIAN, CLASS2 = "any", "nilpotent", "abelian", "class<=2"


@dataclass(frozen=True)
class GroupContext:
    name: str
    order: int
    gamma: int | None
    B: int | None = None
    C: int | None = None

    @property
    def primes(self):
        return prime_factors(self.order)


@dataclass(frozen=True)
class Check:
    id: str
    requires: str
    description: str
    row: Callable | None = None
    pairs: Callable | None = None
    default: bool = True


def applies(check: Check, gamma) -> bool:
    if check.requires == ANY:
        return True
    if gamma is None:
        return False
    if check.requires == NILPOTENT:
        return True
    if check.requires == ABELIAN:
        return gamma <= 1
    return gamma <= 2


def _small_primes_only(x: Fraction, bound: int) -> bool:
    return all(p <= bound for p in prime_factors(x.numerator) + prime_factors(x.denominator))


# -- row checks ------------------------------------------------------------


def _sandwich(r, ctx):
    m, n, e, mo = r["m"], r["n"], r["e"], r["mo"]
    if gcd(m, n) % e:
        return f"e = {e} does not divide gcd(m, n)"
    L = lcm(m, n)
    D, eps = jungnickel_d(m, n, e)
    if e % D:
        return f"D = {D} does not divide e = {e}"
    if mo % (L // D):
        return f"lcm/D = {L // D} does not divide o(a,b) = {mo}"
    if (L // eps) % mo:
        return f"o(a,b) = {mo} does not divide lcm/eps = {L // eps}"
    return None


def _closed_form(r, ctx):
    m, n, e, v, mo = r["m"], r["n"], r["e"], r["v"], r["mo"]
    if gcd(v, e) != 1:
        return f"v = {v} not a unit mod e = {e}"
    value = closed_form_value(m, n, e, 1, v)
    if value != mo:
        return f"closed form {value} != o(a,b) = {mo}"
    for k in range(2, e):
        if gcd(k, e) == 1 and closed_form_value(m, n, e, k % e, v * k % e) != value:
            return f"closed form changes under unit rescaling by {k} mod {e}"
    return None


def _weakbound(r, ctx):
    m, n, oab = r["m"], r["n"], r["oab"]
    L = lcm(m, n)
    if oab % (L // gcd(m, n)) or L % oab:
        return f"lcm/gcd = {L // gcd(m, n)} | o(ab) = {oab} | lcm = {L} fails"
    return None


def _bc(r, ctx):
    oab, mo = r["oab"], r["mo"]
    if (mo * ctx.B) % oab:
        return f"o(ab) = {oab} does not divide o(a,b) * B({ctx.gamma})"
    if (oab * ctx.C) % mo:
        return f"o(a,b) = {mo} does not divide o(ab) * C({ctx.gamma})"
    return None


def _nilpotent_sandwich(r, ctx):
    m, n, e, oab = r["m"], r["n"], r["e"], r["oab"]
    L = lcm(m, n)
    D, eps = jungnickel_d(m, n, e)
    if ((L // eps) * ctx.B) % oab:
        return f"o(ab) = {oab} does not divide lcm * B / eps"
    if (oab * ctx.C) % (L // D):
        return f"lcm/D = {L // D} does not divide o(ab) * C"
    return None


def _hall_corollary(r, ctx):
    if min(ctx.primes, default=ctx.gamma + 1) <= ctx.gamma:
        return None
    if r["oab"] != r["mo"]:
        return f"o(ab) = {r['oab']} != o(a,b) = {r['mo']} although every prime of |G| exceeds the class"
    return None


def _commutator_exponent(r, ctx):
    s = Fraction(r["ocomm"], r["ce_ab"])
    if not _small_primes_only(s, ctx.gamma):
        return f"o([a,b]) / (least commuting exponent) = {s} has a prime above {ctx.gamma}"
    return None


def _ratio_primes(r, ctx):
    s = Fraction(r["oab"], r["mo"])
    if not _small_primes_only(s, ctx.gamma):
        return f"o(ab)/o(a,b) = {s} has a prime above {ctx.gamma}"
    return None


def _class2_ratio(r, ctx):
    rc, mo, oab = r["r"], r["mo"], r["oab"]
    if oab % rc or mo % rc:
        return f"r = {rc} does not divide both o(ab) = {oab} and o(a,b) = {mo}"
    tag = case_ladder(rc, mo, bool(r["witness"]))
    ratio = Fraction(oab, mo)
    if ratio not in (Fraction(1, 2), Fraction(1), Fraction(2)):
        return f"ratio {ratio} outside {{1/2, 1, 2}}"
    if ratio != PREDICTED[tag]:
        return f"{tag} predicts {PREDICTED[tag]}, observed {ratio}"
    if oab * r["ox"] != mo * r["oxy"]:
        return (
            f"o(ab) = {oab} != o(a,b) * o(a^r b^r c^binom(r,2)) / o(a^r b^r) "
            f"= {mo} * {r['oxy']} / {r['ox']}"
        )
    return None


def _commutator_order(r, ctx):
    m, n, rc = r["m"], r["n"], r["r"]
    if r["ocomm"] != rc:
        return "o([a,b]) != o([b,a])"
    if m % r["cen_ab"] or n % r["cen_ba"]:
        return "centralizer intersection size does not divide the element order"
    values = (rc, m // r["cen_ab"], n // r["cen_ba"], r["ce_ab"], r["ce_ba"])
    if len(set(values)) != 1:
        return "o(c), m/|<a>∩C(b)|, n/|<b>∩C(a)|, commuting exponents disagree: %s" % (values,)
    if (gcd(m, n) // r["e"]) % rc:
        return f"o(c) = {rc} does not divide gcd(m,n)/f = {gcd(m, n) // r['e']}"
    if min(gcd(m, n), gcd(m, rc), gcd(n, rc)) == 1 and not r["commutes"]:
        return "two of m, n, o(c) are coprime but a, b do not commute"
    return None


# -- pair checks -------------------------------------------------------------


# orbit representatives are too many for the element-level checks; these
# run on an evenly spread subset of them instead
SPREAD_PAIRS = 2000
# without vectorized arithmetic the identities run on a short prefix
ELEMENT_PAIRS, ELEMENT_N_MAX = 200, 4


def spread_positions(space, limit):
    K = len(space.a_idx)
    if K <= limit:
        return np.arange(K)
    return np.unique(np.linspace(0, K - 1, limit).astype(np.int64))


def identity_pair_count(space) -> int:
    if space.ops is None:
        return min(len(space.a_idx), ELEMENT_PAIRS)
    if space.mode == "orbits":
        return len(spread_positions(space, SPREAD_PAIRS))
    return len(space.a_idx)


def _symmetry(space, ctx):
    mo = space.rows[:, COL["mo"]]
    if space.mode == "exhaustive":
        N = space.G.order
        swapped = mo.reshape(N, N).T.reshape(-1)
    else:
        swapped = space.mutual_orders(space.b_idx, space.a_idx)
    bad = np.nonzero(mo != swapped)[0]
    return [(int(p), f"o(a,b) = {mo[p]} but o(b,a) = {swapped[p]}") for p in bad]


def _power_list(ops, X, E):
    out = [ops.mul(X, ops.inv(X))]
    for _ in range(1, E):
        out.append(ops.mul(out[-1], X))
    return out


def identity_failures(ops, A, B, E, n_max):
    """Mask of pairs where ``(ab)^n = a^n b^n [b,a]^binom(n,2)`` or
    ``[a^i, b^j] = [a,b]^(ij)`` fails, for ``1 <= n`` and ``|i|, |j| <= n_max``."""
    iA, iB = ops.inv(A), ops.inv(B)
    C = ops.mul(ops.mul(ops.mul(iB, iA), B), A)
    CAB = ops.mul(ops.mul(ops.mul(iA, iB), A), B)
    PA, PB, PC = _power_list(ops, A, E), _power_list(ops, B, E), _power_list(ops, C, E)
    PAB, PCAB = _power_list(ops, ops.mul(A, B), E), _power_list(ops, CAB, E)
    bad = np.zeros(np.shape(A), dtype=bool)
    for n in range(1, n_max + 1):
        rhs = ops.mul(ops.mul(PA[n % E], PB[n % E]), PC[(n * (n - 1) // 2) % E])
        bad |= PAB[n % E] != rhs
    for i in range(-n_max, n_max + 1):
        Ai, iAi = PA[i % E], PA[-i % E]
        for j in range(-n_max, n_max + 1):
            comm = ops.mul(ops.mul(ops.mul(iAi, PB[-j % E]), Ai), PB[j % E])
            bad |= comm != PCAB[(i * j) % E]
    return bad


def _class2_identities(space, ctx):
    G, A, B = space.G, space.a_idx, space.b_idx
    if space.ops is None:
        from ..class2 import class2_identities_check

        out = []
        for p in range(identity_pair_count(space)):
            a, b = G.elements[int(A[p])], G.elements[int(B[p])]
            if not class2_identities_check(a, b, ELEMENT_N_MAX):
                out.append((p, f"class-2 identities fail (n_max = {ELEMENT_N_MAX})"))
        return out
    pos = spread_positions(space, SPREAD_PAIRS) if space.mode == "orbits" else np.arange(len(A))
    h = space.handles
    E = G.exponent
    bad = identity_failures(space.ops, h[A[pos]], h[B[pos]], E, E)
    return [(int(pos[p]), f"class-2 identities fail for n, |i|, |j| <= {E}")
            for p in np.nonzero(bad)[0]]


def _evaluate_formal(c, a, b, memo):
    if c in memo:
        return memo[c]
    if c == "a":
        val = a
    elif c == "b":
        val = b
    else:
        x = _evaluate_formal(c[0], a, b, memo)
        y = _evaluate_formal(c[1], a, b, memo)
        val = x.inverse() * y.inverse() * x * y
    memo[c] = val
    return val


def center_power_data(a, b, gamma):
    """Evaluate the center-power statement for the pair ``(a, b)``.

    Returns ``(n, weak_ok, finer_failures)``: ``n`` is the least positive
    integer putting every formal commutator's n-th power into the center of
    ``<a, b>``; ``weak_ok`` says ``c_k^(n A) = 1`` for all ``k >= 2``;
    ``finer_failures`` lists formal indices ``k`` where
    ``c_k^(n (gamma!)^(r-k)) = 1`` fails.
    """
    from math import factorial

    # every value below lies in H = <a, b>, so it is central in H exactly
    # when it commutes with both generators
    def central(y):
        return y * a == a * y and y * b == b * y

    formal = formal_commutators(gamma)
    memo = {}
    values = [_evaluate_formal(c, a, b, memo) for c in formal]
    n = 1
    for x in values:
        k, y = 1, x
        while not central(y):
            y = y * x
            k += 1
        n = lcm(n, k)
    # x^N = 1 iff o(x) | N, so the huge exponents never need to be applied
    orders = [element_order(x) for x in values]
    A = constant_a(gamma)
    weak_ok = all((n * A) % o == 0 for o in orders[2:])
    r = len(formal) - 1
    fg = factorial(gamma)
    finer = [k for k in range(2, r + 1) if (n * fg ** (r - k)) % orders[k]]
    return n, weak_ok, finer


def _lemma_center(space, ctx):
    G, out = space.G, []
    pos = spread_positions(space, SPREAD_PAIRS) if space.mode == "orbits" else range(len(space.a_idx))
    for p in pos:
        a, b = G.elements[int(space.a_idx[p])], G.elements[int(space.b_idx[p])]
        n, weak_ok, _ = center_power_data(a, b, ctx.gamma)
        if not weak_ok:
            out.append((int(p), f"c_k^(n A) != 1 with n = {n}"))
    return out


CHECKS = (
    Check("sandwich", ANY, "lcm/D | o(a,b) | lcm/eps", row=_sandwich),
    Check("closed-form", ANY, "o(a,b) = lcm / gcd(e, v m' + u n'), unit invariant", row=_closed_form),
    Check("symmetry", ANY, "o(a,b) = o(b,a)", pairs=_symmetry),
    Check("weakbound", ABELIAN, "lcm/gcd | o(ab) | lcm in abelian groups", row=_weakbound),
    Check("bc-divisibility", NILPOTENT, "o(ab) | o(a,b) B and o(a,b) | o(ab) C", row=_bc),
    Check("nilpotent-sandwich", NILPOTENT, "o(ab) | lcm B/eps and lcm/D | o(ab) C",
          row=_nilpotent_sandwich),
    Check("hall-corollary", NILPOTENT, "o(ab) = o(a,b) when every prime of |G| exceeds the class",
          row=_hall_corollary),
    Check("commutator-exponent", NILPOTENT,
          "o([a,b]) / least commuting exponent has primes <= class", row=_commutator_exponent),
    Check("ratio-primes", NILPOTENT, "o(ab)/o(a,b) has primes <= class", row=_ratio_primes),
    Check("class2-ratio", CLASS2, "o(ab)/o(a,b) in {1/2,1,2}, formula and case ladder",
          row=_class2_ratio),
    Check("commutator-order", CLASS2, "o([a,b]) via centralizers and commuting exponents",
          row=_commutator_order),
    Check("class2-identities", CLASS2, "(ab)^n = a^n b^n [b,a]^binom(n,2), [a^i,b^j] = [a,b]^ij",
          pairs=_class2_identities),
    Check("lemma-center", NILPOTENT, "c_k^(n A) = 1 once all c_i^n are central",
          pairs=_lemma_center, default=False),
)
BY_ID = {c.id: c for c in CHECKS}

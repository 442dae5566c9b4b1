"""Mutual order and the divisibility calculus around it.

The mutual order ``o(a, b)`` is the least ``N >= 1`` with ``a^N b^N = 1``.
The set of such ``N`` is a subgroup of the integers containing
``lcm(o(a), o(b))``, so it suffices to scan divisors of that lcm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .elements import (
    GroupElement,
    commutator,
    conjugate,
    element_order,
    identity_like,
    inverse,
    power,
)
from .errors import InternalInconsistency, RepresentationMismatch, TheoremViolation
from .groups import IntersectionData, cyclic_intersection

__all__ = [
    "IntersectionData",
    "PairOrderReport",
    "closed_form_value",
    "commutator_exponent",
    "coprime_part",
    "deviation",
    "divisors",
    "jungnickel_data",
    "jungnickel_d",
    "mutual_order",
    "mutual_order_closed_form",
    "mutual_order_of_powers",
]


def _lcm(a, b):
    return a // gcd(a, b) * b


def divisors(n: int):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def coprime_part(e: int, k: int) -> int:
    """Largest divisor of ``e`` coprime to ``k``."""
    g = gcd(e, k)
    while g > 1:
        e //= g
        g = gcd(e, k)
    return e


def jungnickel_d(m: int, n: int, e: int):
    """``(D, epsilon)``: D is the largest divisor of e coprime to m/gcd and n/gcd."""
    g = gcd(m, n)
    D = coprime_part(e, (m // g) * (n // g))
    return D, (2 if D % 2 == 0 else 1)


def mutual_order(a: GroupElement, b: GroupElement) -> int:
    if a.params != b.params:
        raise RepresentationMismatch(f"cannot combine {a.params} with {b.params}")
    one = identity_like(a)
    L = _lcm(element_order(a), element_order(b))
    for N in divisors(L):
        if power(a, N) * power(b, N) == one:
            return N
    raise AssertionError("a^L b^L must be trivial for L = lcm(o(a), o(b))")


def mutual_order_of_powers(a, b, k: int) -> int:
    """``o(a^k, b^k) = o(a,b) / gcd(o(a,b), k)``, cross-checked by direct search."""
    o = mutual_order(a, b)
    predicted = o // gcd(o, k)
    direct = mutual_order(power(a, k), power(b, k))
    if predicted != direct:
        raise InternalInconsistency(
            f"o(a^{k}, b^{k}) = {direct} but o(a,b)/gcd = {predicted}"
        )
    return predicted


def closed_form_value(m, n, e, u, v) -> int:
    """``lcm(m, n) / gcd(e, v m' + u n')`` with ``m' = m/gcd(m,n)``, ``n' = n/gcd(m,n)``."""
    g = gcd(m, n)
    return _lcm(m, n) // gcd(e, v * (m // g) + u * (n // g))


def mutual_order_closed_form(data: IntersectionData, a=None, b=None) -> int:
    """Closed-form mutual order from intersection data.

    The value is also recomputed for every rescaling ``(u k, v k) mod e`` by
    a unit ``k``, which must leave it unchanged. When ``a`` and ``b`` are
    supplied the result is compared with :func:`mutual_order`.
    """
    m, n, e, u, v = data.m, data.n, data.e, data.u, data.v
    value = closed_form_value(m, n, e, u, v)
    for k in range(1, e):
        if gcd(k, e) == 1 and closed_form_value(m, n, e, u * k % e, v * k % e) != value:
            raise TheoremViolation(f"closed form not invariant under unit {k} mod {e}")
    if a is not None and b is not None:
        direct = mutual_order(a, b)
        if direct != value:
            raise TheoremViolation(f"closed form gives {value}, direct search {direct}")
    return value


@dataclass(frozen=True)
class PairOrderReport:
    m: int
    n: int
    e: int
    D: int
    epsilon: int
    mutual_order: int
    product_order: int
    ratio: Fraction
    r_commutator: int
    m_prime: int
    n_prime: int

    @property
    def lcm(self) -> int:
        return _lcm(self.m, self.n)


def jungnickel_data(a: GroupElement, b: GroupElement) -> PairOrderReport:
    """All order data of a pair, asserting ``lcm/D | o(a,b) | lcm/epsilon``."""
    data = cyclic_intersection(a, b)
    m, n, e = data.m, data.n, data.e
    g = gcd(m, n)
    D, eps = jungnickel_d(m, n, e)
    mo = mutual_order(a, b)
    L = _lcm(m, n)
    if mo % (L // D) or (L // eps) % mo:
        raise TheoremViolation(
            f"sandwich fails: lcm={L}, D={D}, eps={eps}, o(a,b)={mo}"
        )
    oab = element_order(a * b)
    return PairOrderReport(
        m=m,
        n=n,
        e=e,
        D=D,
        epsilon=eps,
        mutual_order=mo,
        product_order=oab,
        ratio=Fraction(oab, mo),
        r_commutator=element_order(commutator(b, a)),
        m_prime=m // g,
        n_prime=n // g,
    )


def deviation(a: GroupElement, b: GroupElement, k: int) -> GroupElement:
    """``d_k(a, b)`` with ``(ab)^k = a^k b^k d_k(a, b)``.

    Evaluated through ``d_j(a,b) = ([b^(j-1), a^(j-1)] d_(j-1)(b,a))^b``,
    carrying both argument orders along since each step swaps them.
    """
    if k < 1:
        raise ValueError("k must be positive")
    one = identity_like(a)
    d_ab, d_ba = one, one
    for j in range(2, k + 1):
        aj, bj = power(a, j - 1), power(b, j - 1)
        d_ab, d_ba = (
            conjugate(commutator(bj, aj) * d_ba, b),
            conjugate(commutator(aj, bj) * d_ab, a),
        )
    return d_ab


def commutator_exponent(a: GroupElement, b: GroupElement) -> int:
    """Least ``k >= 1`` with ``a^k`` commuting with ``b``, as ``o(a^-1, b^-1 a b)``."""
    return mutual_order(inverse(a), conjugate(a, b))

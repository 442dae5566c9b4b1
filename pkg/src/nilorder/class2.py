"""Exact ratio o(ab)/o(a,b) in groups of nilpotency class at most 2."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .elements import GroupElement, commutator, element_order, power
from .errors import PreconditionError, TheoremViolation
from .groups import FiniteGroup, centralizer, cyclic_intersection, cyclic_subgroup
from .order import commutator_exponent, mutual_order

R_ODD = "R_ODD"
R_EVEN_Q_ODD = "R_EVEN_Q_ODD"
R_EVEN_Q_EVEN_HALF = "R_EVEN_Q_EVEN_HALF"
R_EVEN_Q_EVEN_ONE = "R_EVEN_Q_EVEN_ONE"

PREDICTED = {
    R_ODD: Fraction(1),
    R_EVEN_Q_ODD: Fraction(2),
    R_EVEN_Q_EVEN_HALF: Fraction(1, 2),
    R_EVEN_Q_EVEN_ONE: Fraction(1),
}


@dataclass(frozen=True)
class Class2Verdict:
    r: int
    q: int
    case_tag: str
    predicted_ratio: Fraction
    witness_equal: bool | None = None
    half_quotient_odd: bool | None = None
    product_order: int = 0
    mutual_order: int = 0


def case_ladder(r: int, mo: int, witness_equal: bool):
    """Case tag from ``r = o([b,a])``, ``o(a,b)`` and the element-equality witness.

    ``witness_equal`` is ``a^(o/2) b^(o/2) == c^(r/2)``; it only matters when
    ``r`` and ``o(a,b)/r`` are both even.
    """
    if mo % r:
        raise TheoremViolation(f"r = {r} does not divide o(a,b) = {mo}")
    q = mo // r
    if r % 2:
        return R_ODD
    if q % 2:
        return R_EVEN_Q_ODD
    if witness_equal and (mo // (2 * r)) % 2 == 1:
        return R_EVEN_Q_EVEN_HALF
    return R_EVEN_Q_EVEN_ONE


def _require_class2(G: FiniteGroup | None):
    if G is None:
        return
    cls = G.nilpotency_class
    if cls is None or cls > 2:
        raise PreconditionError(f"{G!r} has nilpotency class {cls}, need at most 2")


def class2_identities_check(a: GroupElement, b: GroupElement, n_max: int, G=None) -> bool:
    """``(ab)^n = a^n b^n [b,a]^binom(n,2)`` and ``[a^i, b^j] = [a,b]^(ij)``."""
    _require_class2(G)
    ab = a * b
    c = commutator(b, a)
    for n in range(1, n_max + 1):
        if power(ab, n) != power(a, n) * power(b, n) * power(c, n * (n - 1) // 2):
            return False
    cab = commutator(a, b)
    for i in range(-n_max, n_max + 1):
        ai = power(a, i)
        for j in range(-n_max, n_max + 1):
            if commutator(ai, power(b, j)) != power(cab, i * j):
                return False
    return True


def commutator_order_class2(G: FiniteGroup, a: GroupElement, b: GroupElement) -> int:
    """``o([a,b])``, checked against the centralizer quotients and commutator exponents."""
    _require_class2(G)
    m, n = element_order(a), element_order(b)
    oc = element_order(commutator(a, b))
    ca = centralizer(G, b)
    cb = centralizer(G, a)
    via_a = m // sum(1 for x in cyclic_subgroup(a) if x in ca)
    via_b = n // sum(1 for y in cyclic_subgroup(b) if y in cb)
    k_ab = commutator_exponent(a, b)
    k_ba = commutator_exponent(b, a)
    if not oc == via_a == via_b == k_ab == k_ba:
        raise TheoremViolation(
            f"o(c)={oc}, m/|<a>∩C(b)|={via_a}, n/|<b>∩C(a)|={via_b}, "
            f"exponents {k_ab}, {k_ba}"
        )
    f = cyclic_intersection(a, b).e
    if (gcd(m, n) // f) % oc:
        raise TheoremViolation(f"o(c) = {oc} does not divide gcd(m,n)/f = {gcd(m, n) // f}")
    return oc


def classify_pair(G: FiniteGroup | None, a: GroupElement, b: GroupElement) -> Class2Verdict:
    """Predict o(ab)/o(a,b) in {1/2, 1, 2} and check it two independent ways."""
    _require_class2(G)
    c = commutator(b, a)
    r = element_order(c)
    mo = mutual_order(a, b)
    oab = element_order(a * b)
    if oab % r:
        raise TheoremViolation(f"r = {r} does not divide o(ab) = {oab}")
    witness = None
    half_odd = None
    if r % 2 == 0 and mo % 2 == 0:
        h = mo // 2
        witness = power(a, h) * power(b, h) == power(c, r // 2)
        half_odd = (mo // (2 * r)) % 2 == 1 if mo % (2 * r) == 0 else None
    tag = case_ladder(r, mo, bool(witness))
    predicted = PREDICTED[tag]
    if Fraction(oab, mo) != predicted:
        raise TheoremViolation(
            f"{tag}: predicted ratio {predicted}, observed {Fraction(oab, mo)}"
        )
    x = power(a, r) * power(b, r)
    xy = x * power(c, r * (r - 1) // 2)
    if oab * element_order(x) != mo * element_order(xy):
        raise TheoremViolation("o(ab) != o(a,b) * o(a^r b^r c^binom(r,2)) / o(a^r b^r)")
    return Class2Verdict(
        r=r,
        q=mo // r,
        case_tag=tag,
        predicted_ratio=predicted,
        witness_equal=witness,
        half_quotient_odd=half_odd,
        product_order=oab,
        mutual_order=mo,
    )

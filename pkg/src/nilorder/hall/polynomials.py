"""Hall polynomials ``f_k`` with ``(ab)^n = a^n b^n c_2^f_2(n) ... c_r^f_r(n)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..errors import DomainError, TheoremViolation
from .basis import check_gamma
from .collector import get_collector


def binom(x: int, k: int) -> int:
    """Generalized binomial coefficient, valid for negative ``x``."""
    num = 1
    for i in range(k):
        num *= x - i
    return num // factorial(k)


@dataclass(frozen=True)
class BinomialPolynomial:
    """``f(x) = sum_{l>=1} coefficients[l-1] * binom(x, l)``; no constant term."""

    coefficients: tuple

    @property
    def degree_bound(self) -> int:
        return len(self.coefficients)

    def __call__(self, x: int) -> int:
        return sum(lam * binom(x, l) for l, lam in enumerate(self.coefficients, start=1))

    def monomial_coefficients(self):
        """Rational coefficients of ``x^0, x^1, ...`` in the monomial basis."""
        out = [Fraction(0)] * (len(self.coefficients) + 1)
        for l, lam in enumerate(self.coefficients, start=1):
            # binom(x, l) = x (x-1) ... (x-l+1) / l!
            poly = [Fraction(1)]
            for i in range(l):
                nxt = [Fraction(0)] * (len(poly) + 1)
                for d, c in enumerate(poly):
                    nxt[d + 1] += c
                    nxt[d] -= i * c
                poly = nxt
            for d, c in enumerate(poly):
                out[d] += lam * c / factorial(l)
        return out

    def common_denominator(self) -> int:
        from math import lcm

        den = 1
        for c in self.monomial_coefficients():
            den = lcm(den, c.denominator)
        return den


def _forward_differences(values):
    out = []
    row = list(values)
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


@lru_cache(maxsize=None)
def hall_polynomials(gamma: int):
    """Map basis index ``k >= 2`` to its :class:`BinomialPolynomial`.

    Each ``f_k`` is interpolated from the collected powers ``(ab)^n`` for
    ``n = 0..w_k`` and then re-checked on a wider range of ``n``, negatives
    included.
    """
    check_gamma(gamma)
    col = get_collector(gamma)
    ab = col.collect([(0, 1), (1, 1)])
    top = max(c.weight for c in col.basis)
    check_range = range(-gamma - 1, 2 * gamma + 4)
    powers = {n: col.power(ab, n) for n in set(range(top + 1)) | set(check_range)}
    for n, w in powers.items():
        if w[0] != n or w[1] != n:
            raise TheoremViolation(f"(ab)^{n} has a/b exponents {w[:2]}")
    out = {}
    for c in col.basis[2:]:
        k, wk = c.index, c.weight
        lam = _forward_differences([powers[n][k] for n in range(wk + 1)])
        if lam[0] != 0:
            raise TheoremViolation(f"f_{k}(0) = {lam[0]} != 0")
        f = BinomialPolynomial(tuple(lam[1:]))
        for n in check_range:
            if f(n) != powers[n][k]:
                raise TheoremViolation(f"f_{k} has degree above {wk}: mismatch at n = {n}")
        out[k] = f
    return out


def divisibility_check(gamma: int, X: int) -> bool:
    """True iff ``X / gamma!`` divides every ``f_k(X)``; requires ``gamma! | X``."""
    fg = factorial(gamma)
    if X <= 0 or X % fg:
        raise DomainError(f"{gamma}! = {fg} must divide X = {X}")
    q = X // fg
    return all(f(X) % q == 0 for f in hall_polynomials(gamma).values())


def format_golden(gammas) -> str:
    """Golden lambda table: one line ``gamma k weight lambda_1 .. lambda_w`` per basis index."""
    lines = []
    for g in gammas:
        basis = get_collector(g).basis
        for k, f in sorted(hall_polynomials(g).items()):
            fields = [g, k, basis[k].weight, *f.coefficients]
            lines.append(" ".join(str(x) for x in fields))
    return "\n".join(lines) + "\n"


def parse_golden(text: str):
    """Inverse of :func:`format_golden`: ``{(gamma, k): (weight, lambdas)}``."""
    table = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            fields = [int(t) for t in line.split()]
        except ValueError as exc:
            raise ValueError(f"golden line {lineno}: non-integer field") from exc
        if len(fields) < 3 or len(fields) != 3 + fields[2]:
            raise ValueError(f"golden line {lineno}: expected 3 + weight fields")
        table[fields[0], fields[1]] = (fields[2], tuple(fields[3:]))
    return table

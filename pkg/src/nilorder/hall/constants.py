"""The class constants A, B, C bounding o(ab) against o(a, b)."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from ..errors import TheoremViolation
from .basis import formal_commutator_count


def prime_factors(n: int):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def strip_primes_up_to(n: int, bound: int) -> int:
    """``n`` with every prime factor ``<= bound`` divided out (trial division)."""
    for p in range(2, bound + 1):
        while n % p == 0:
            n //= p
    return n


def constant_a(gamma: int) -> int:
    """``A(gamma) = (gamma!)^(r - 2)`` with ``r`` the formal commutator index."""
    _, r = formal_commutator_count(gamma)
    if r < 2:
        return 1
    return factorial(gamma) ** (r - 2)


@dataclass(frozen=True)
class ClassConstants:
    gamma: int
    r_formal: int
    A: int
    B: int
    C: int

    @property
    def B_prime(self) -> int:
        return self.B // factorial(self.gamma)

    @property
    def C_prime(self) -> int:
        return self.C // factorial(self.gamma)


def class_constants(gamma: int) -> ClassConstants:
    _, r = formal_commutator_count(gamma)
    A = constant_a(gamma)
    B = factorial(gamma)
    C = factorial(gamma)
    for i in range(2, gamma + 1):
        B *= constant_a(i)
        C *= constant_a(i) * factorial(i - 1)
    for name, value in (("A", A), ("B", B), ("C", C)):
        if strip_primes_up_to(value, gamma) != 1:
            raise TheoremViolation(f"{name}({gamma}) has a prime factor above {gamma}")
    return ClassConstants(gamma=gamma, r_formal=r, A=A, B=B, C=C)

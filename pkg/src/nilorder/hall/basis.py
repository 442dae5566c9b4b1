"""Basic commutators on two generators, and the formal complex-commutator count."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import DomainError

MAX_GAMMA = 6


@dataclass(frozen=True)
class BasicCommutator:
    index: int
    weight: int
    left: int | None = None
    right: int | None = None
    name: str = ""

    @property
    def is_generator(self) -> bool:
        return self.left is None


def check_gamma(gamma, max_gamma=MAX_GAMMA):
    if not isinstance(gamma, int) or not 1 <= gamma <= max_gamma:
        raise DomainError(f"class must be an integer in [1, {max_gamma}], got {gamma!r}")


@lru_cache(maxsize=None)
def _basis(gamma):
    basis = [
        BasicCommutator(0, 1, name="a"),
        BasicCommutator(1, 1, name="b"),
    ]
    for w in range(2, gamma + 1):
        current = len(basis)
        # [u, v] is basic iff u > v and, when u = [x, y], y <= v
        for u in basis[:current]:
            for v in basis[:current]:
                if u.weight + v.weight != w or u.index <= v.index:
                    continue
                if not u.is_generator and u.right > v.index:
                    continue
                basis.append(
                    BasicCommutator(len(basis), w, u.index, v.index, f"[{u.name},{v.name}]")
                )
    return tuple(basis)


def hall_basis(gamma: int, max_gamma=MAX_GAMMA):
    """Ordered basic commutators of weight <= gamma: ``a, b, [b,a], [[b,a],a], ...``.

    Ordered by weight, then by (left index, right index).
    """
    check_gamma(gamma, max_gamma)
    return list(_basis(gamma))


def formal_commutator_count(gamma: int):
    """Counts of all formal complex commutators per weight, and the last index ``r``.

    Degenerate brackets such as ``[a, a]`` are included; ``c_0 = a``,
    ``c_1 = b``, so ``r = (total count) - 1``.
    """
    if gamma < 1:
        raise DomainError("class must be positive")
    counts = {1: 2}
    for w in range(2, gamma + 1):
        counts[w] = sum(counts[i] * counts[w - i] for i in range(1, w))
    return counts, sum(counts.values()) - 1


def formal_commutators(gamma: int):
    """All formal complex commutators of weight <= gamma as nested tuples, in index order.

    Leaves are ``"a"`` and ``"b"``; a bracket ``[S, T]`` is the pair ``(S, T)``.
    Within a weight, brackets are listed by (weight of S, index of S, index of T).
    """
    by_weight = {1: ["a", "b"]}
    for w in range(2, gamma + 1):
        by_weight[w] = [(S, T) for w1 in range(1, w) for S in by_weight[w1] for T in by_weight[w - w1]]
    return [c for w in range(1, gamma + 1) for c in by_weight[w]]


def is_degenerate(c) -> bool:
    if isinstance(c, str):
        return False
    S, T = c
    return S == T or is_degenerate(S) or is_degenerate(T)

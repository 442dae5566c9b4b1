"""Finite groups given by generators, enumerated by breadth-first closure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .elements import GroupElement, commutator, conjugate, element_order, identity_like, power
from .errors import GroupTooLarge, MembershipError, RepresentationMismatch

DEFAULT_CAP = 20000


@dataclass(frozen=True)
class IntersectionData:
    """Data of ``<a> ∩ <b>``: ``a^(m/e) = g^u`` and ``b^(n/e) = g^v`` with ``o(g) = e``."""

    e: int
    g: GroupElement
    u: int
    v: int
    m: int
    n: int


class FiniteGroup:
    """A group with a fully enumerated, deterministically ordered element table.

    Elements are listed in BFS order from the identity, expanding each
    element by right multiplication with the generators in index order.
    """

    def __init__(self, generators, elements, parents, name=None):
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        # parents[i] = (j, k): elements[i] = elements[j] * generators[k]
        self._parents = tuple(parents)
        self.identity = self.elements[0]
        self.name = name

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __repr__(self):
        label = self.name or "FiniteGroup"
        return f"<{label} of order {self.order}>"

    def element(self, i: int) -> GroupElement:
        return self.elements[i]

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(x * y == y * x for x in gens for y in gens)

    @cached_property
    def lower_central_series(self):
        return lower_central_series(self)

    @cached_property
    def nilpotency_class(self):
        return nilpotency_class(self)

    @cached_property
    def center(self) -> frozenset:
        gens = self.generators
        return frozenset(z for z in self.elements if all(z * g == g * z for g in gens))

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        e = 1
        for x in self.elements:
            e = lcm(e, element_order(x))
        return e

    def table(self):
        """Integer multiplication/power tables used by the sweep kernels (cached)."""
        from .tables import build_table

        if "_table" not in self.__dict__:
            self.__dict__["_table"] = build_table(self)
        return self.__dict__["_table"]


def _closure(generators, cap, one):
    elements = [one]
    parents = [(-1, -1)]
    seen = {one: 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        x = elements[i]
        for k, g in enumerate(generators):
            y = x * g
            if y not in seen:
                if len(elements) >= cap:
                    raise GroupTooLarge(cap)
                seen[y] = len(elements)
                elements.append(y)
                parents.append((i, k))
                queue.append(len(elements) - 1)
    return elements, parents


def generate(generators, cap=DEFAULT_CAP, name=None) -> FiniteGroup:
    """Enumerate the group generated by ``generators``; raises :class:`GroupTooLarge` past ``cap``."""
    generators = list(generators)
    if not generators:
        raise ValueError("at least one generator is required")
    p0 = generators[0].params
    for g in generators[1:]:
        if g.params != p0:
            raise RepresentationMismatch(f"generator {g!r} does not match {p0}")
    one = identity_like(generators[0])
    elements, parents = _closure(generators, cap, one)
    return FiniteGroup(generators, elements, parents, name=name)


def subgroup(generators, one) -> frozenset:
    """Element set of the subgroup generated by ``generators``."""
    elements, _ = _closure(list(generators), float("inf"), one)
    return frozenset(elements)


def normal_closure(G: FiniteGroup, gens):
    """Smallest normal subgroup containing ``gens``; returns (element set, generating list)."""
    gens = list(dict.fromkeys(gens))
    H = subgroup(gens, G.identity)
    while True:
        new = []
        for h in gens:
            for g in G.generators:
                y = conjugate(h, g)
                if y not in H:
                    new.append(y)
        if not new:
            return H, gens
        gens.extend(dict.fromkeys(new))
        H = subgroup(gens, G.identity)


def lower_central_series(G: FiniteGroup):
    """``[G, [G,G], [[G,G],G], ...]`` stopping at the first repeated term."""
    series = [frozenset(G.elements)]
    gens = list(G.generators)
    while len(series[-1]) > 1:
        comms = [commutator(h, x) for h in gens for x in G.generators]
        H, gens = normal_closure(G, comms)
        if len(H) == len(series[-1]):
            break
        series.append(H)
    return series


def nilpotency_class(G: FiniteGroup):
    """Number of steps for the lower central series to reach 1, or None if it stalls."""
    series = G.lower_central_series if isinstance(G, FiniteGroup) else lower_central_series(G)
    if len(series[-1]) != 1:
        return None
    return len(series) - 1


def centralizer(G: FiniteGroup, g: GroupElement) -> frozenset:
    if g not in G:
        raise MembershipError(f"{g!r} is not an element of {G!r}")
    return frozenset(x for x in G.elements if x * g == g * x)


def cyclic_subgroup(a: GroupElement):
    """Powers ``[a^0, a^1, ..., a^(m-1)]``."""
    one = identity_like(a)
    out = [one]
    y = a
    while y != one:
        out.append(y)
        y = y * a
    return out


def cyclic_intersection(a: GroupElement, b: GroupElement) -> IntersectionData:
    """Order and generator data of ``<a> ∩ <b>``, by enumeration.

    The generator is taken as ``g = a^(m/e)`` so ``u = 1``; ``v`` is the
    discrete log of ``b^(n/e)`` to base ``g``.
    """
    if a.params != b.params:
        raise RepresentationMismatch(f"cannot combine {a.params} with {b.params}")
    pa = cyclic_subgroup(a)
    pb = set(cyclic_subgroup(b))
    m, n = len(pa), len(pb)
    e = sum(1 for x in pa if x in pb)
    g = power(a, m // e)
    target = power(b, n // e)
    y = g
    for v in range(1, e + 1):
        if y == target:
            return IntersectionData(e=e, g=g, u=1, v=v, m=m, n=n)
        y = y * g
    raise AssertionError("b^(n/e) is not a power of a^(m/e)")

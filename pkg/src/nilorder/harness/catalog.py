"""Concrete finite groups the verification sweeps run over."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from ..elements import PERM, UNITRI, GroupElement, from_cycles, permutation, unitriangular
from ..errors import InternalInconsistency
from ..groups import DEFAULT_CAP, FiniteGroup, generate

# groups up to this size are swept pair by pair through a dense table; larger
# unitriangular groups are swept over pair orbits under conjugation, anything
# else on a deterministic sample of pairs
EXHAUSTIVE_LIMIT = 4096
SAMPLE_PAIRS = 3000


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    construction: Callable[[], list] = field(repr=False)
    expected_order: int
    expected_class: int | None
    prime: int | None = None
    description: str = ""

    @property
    def exhaustive(self) -> bool:
        return self.expected_order <= EXHAUSTIVE_LIMIT

    @property
    def sweep_mode(self) -> str:
        if self.exhaustive:
            return "exhaustive"
        return "orbits" if self.construction()[0].kind == UNITRI else "sampled"

    def build(self, cap=DEFAULT_CAP) -> FiniteGroup:
        G = generate(self.construction(), cap=cap, name=self.name)
        if G.order != self.expected_order:
            raise InternalInconsistency(
                f"{self.name}: generated order {G.order}, expected {self.expected_order}"
            )
        if G.nilpotency_class != self.expected_class:
            raise InternalInconsistency(
                f"{self.name}: class {G.nilpotency_class}, expected {self.expected_class}"
            )
        return G


# -- constructions ---------------------------------------------------------


def _cycle(start, length, degree):
    return from_cycles([tuple(range(start, start + length))], degree)


def dihedral(n):
    """Symmetries of an n-gon on points 0..n-1: rotation and reflection i -> 2 - i.

    For n = 4 these are (1 2 3 4) and (1 3) in 1-based cycle notation.
    """
    r = _cycle(0, n, n)
    s = permutation([(2 - i) % n for i in range(n)])
    return [r, s]


def abelian(*moduli):
    degree = sum(moduli)
    gens, start = [], 0
    for q in moduli:
        gens.append(_cycle(start, q, degree))
        start += q
    return gens


def symmetric(n):
    return [_cycle(0, n, n), from_cycles([(0, 1)], n)]


def heisenberg(q):
    return [
        unitriangular([1, 1, 0, 0, 1, 0, 0, 0, 1], 3, q),
        unitriangular([1, 0, 0, 0, 1, 1, 0, 0, 1], 3, q),
    ]


def unitriangular_group(dim, q):
    gens = []
    for i in range(dim - 1):
        e = [1 if r == c else 0 for r in range(dim) for c in range(dim)]
        e[i * dim + i + 1] = 1
        gens.append(unitriangular(e, dim, q))
    return gens


def regular_representation(elements, mul, gens):
    """Right regular permutation images of ``gens`` for an abstract group."""
    index = {x: i for i, x in enumerate(elements)}
    return [permutation([index[mul(x, g)] for x in elements]) for g in gens]


def quaternion():
    # units (sign, k) for +-1, +-i, +-j, +-k; k in 0..3
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def mul(x, y):
        s, k = table[x[1], y[1]]
        return (x[0] * y[0] * s, k)

    elements = [(s, k) for s in (1, -1) for k in range(4)]
    return regular_representation(elements, mul, [(1, 1), (1, 2)])


def modular16():
    """``<x, y | x^8, y^2, y x y = x^5>`` as pairs (p, q) meaning ``x^p y^q``."""

    def mul(u, v):
        return ((u[0] + pow(5, u[1]) * v[0]) % 8, (u[1] + v[1]) % 2)

    elements = [(p, q) for q in range(2) for p in range(8)]
    return regular_representation(elements, mul, [(1, 0), (0, 1)])


def as_permutations(gens):
    """Permutation generators for the group generated by ``gens`` (regular rep if needed)."""
    if gens[0].kind == PERM:
        return list(gens)
    G = generate(gens)
    return regular_representation(G.elements, lambda x, y: x * y, gens)


def direct_product(*factors):
    """Generators of a direct product, with factors placed on disjoint point sets."""
    factors = [as_permutations(f) for f in factors]
    degree = sum(f[0].dim for f in factors)
    out, offset = [], 0
    for gens in factors:
        d = gens[0].dim
        for g in gens:
            images = list(range(degree))
            for i, j in enumerate(g.data):
                images[offset + i] = offset + j
            out.append(GroupElement(PERM, tuple(images), degree))
        offset += d
    return out


# -- the catalog -------------------------------------------------------------


def _entries():
    return [
        CatalogEntry("D4", lambda: dihedral(4), 8, 2, 2, "dihedral group of order 8"),
        CatalogEntry("Q8", quaternion, 8, 2, 2, "quaternion group"),
        CatalogEntry("dih16", lambda: dihedral(8), 16, 3, 2, "dihedral group of order 16"),
        CatalogEntry("mod16", modular16, 16, 2, 2, "modular group M16"),
        CatalogEntry("heis3", lambda: heisenberg(3), 27, 2, 3, "Heisenberg group mod 3"),
        CatalogEntry("heis4", lambda: heisenberg(4), 64, 2, 2, "Heisenberg group mod 4"),
        CatalogEntry("heis5", lambda: heisenberg(5), 125, 2, 5, "Heisenberg group mod 5"),
        CatalogEntry("heis9", lambda: heisenberg(9), 729, 2, 3, "Heisenberg group mod 9"),
        CatalogEntry("heis27", lambda: heisenberg(27), 19683, 2, 3, "Heisenberg group mod 27"),
        CatalogEntry("ut4_2", lambda: unitriangular_group(4, 2), 64, 3, 2, "UT(4, Z/2)"),
        CatalogEntry("ut4_3", lambda: unitriangular_group(4, 3), 729, 3, 3, "UT(4, Z/3)"),
        CatalogEntry("z4xz6", lambda: abelian(4, 6), 24, 1, None, "Z/4 x Z/6"),
        CatalogEntry("z4xz8", lambda: abelian(4, 8), 32, 1, 2, "Z/4 x Z/8"),
        CatalogEntry("z6xz9", lambda: abelian(6, 9), 54, 1, None, "Z/6 x Z/9"),
        CatalogEntry("z5xz10", lambda: abelian(5, 10), 50, 1, None, "Z/5 x Z/10"),
        CatalogEntry("D4xZ3", lambda: direct_product(dihedral(4), abelian(3)), 24, 2, None,
                     "D4 x Z/3"),
        CatalogEntry("Q8xheis3", lambda: direct_product(quaternion(), heisenberg(3)), 216, 2,
                     None, "Q8 x Heisenberg mod 3"),
        CatalogEntry("dih16xZ3", lambda: direct_product(dihedral(8), abelian(3)), 48, 3, None,
                     "dihedral of order 16 x Z/3"),
        CatalogEntry("S4", lambda: symmetric(4), 24, None, None, "symmetric group S4"),
        CatalogEntry("S3xZ4", lambda: direct_product(symmetric(3), abelian(4)), 24, None, None,
                     "S3 x Z/4"),
    ]


CATALOG = tuple(_entries())
BY_NAME = {e.name: e for e in CATALOG}


def catalog():
    return list(CATALOG)


def get_entry(name: str) -> CatalogEntry:
    try:
        return BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown catalog group {name!r}") from None


@lru_cache(maxsize=None)
def build(name: str) -> FiniteGroup:
    """Build (and cache) a catalog group by name."""
    return get_entry(name).build()

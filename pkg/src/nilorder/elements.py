"""Exact group elements: permutations and unitriangular residue matrices.

Products are read left to right, ``x * y`` means "apply x, then y" for
permutations, and ordinary matrix product for matrices. The commutator
convention is ``[x, y] = x^-1 y^-1 x y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import RepresentationMismatch

PERM = "perm"
UNITRI = "unitri"


def _lcm(a, b):
    return a // gcd(a, b) * b


@dataclass(frozen=True, slots=True)
class GroupElement:
    """A permutation of ``range(dim)`` or a ``dim x dim`` unitriangular matrix mod ``modulus``.

    ``data`` holds the image list for permutations and the row-major entries
    for matrices. Use :func:`permutation` / :func:`unitriangular` to build
    validated instances.
    """

    kind: str
    data: tuple
    dim: int
    modulus: int = 0

    @property
    def params(self):
        return (self.kind, self.dim, self.modulus)

    def _check(self, other):
        if self.params != other.params:
            raise RepresentationMismatch(
                f"cannot combine {self.params} with {other.params}"
            )

    def __mul__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        if self.kind == PERM:
            y = other.data
            return GroupElement(PERM, tuple(y[i] for i in self.data), self.dim)
        d, q = self.dim, self.modulus
        x, y = self.data, other.data
        out = [0] * (d * d)
        for i in range(d):
            for j in range(i, d):
                s = 0
                for k in range(i, j + 1):
                    s += x[i * d + k] * y[k * d + j]
                out[i * d + j] = s % q
        return GroupElement(UNITRI, tuple(out), d, q)

    def inverse(self) -> GroupElement:
        if self.kind == PERM:
            inv = [0] * self.dim
            for i, j in enumerate(self.data):
                inv[j] = i
            return GroupElement(PERM, tuple(inv), self.dim)
        # back substitution for U^-1 with U upper unitriangular
        d, q, u = self.dim, self.modulus, self.data
        out = [0] * (d * d)
        for i in range(d):
            out[i * d + i] = 1
        for j in range(d):
            for i in range(j - 1, -1, -1):
                s = 0
                for k in range(i + 1, j + 1):
                    s += u[i * d + k] * out[k * d + j]
                out[i * d + j] = (-s) % q
        return GroupElement(UNITRI, tuple(out), d, q)

    def __pow__(self, k: int) -> GroupElement:
        return power(self, k)

    def is_identity(self) -> bool:
        return self == identity_like(self)

    def __repr__(self):
        if self.kind == PERM:
            return f"Perm({format_cycles(self)})"
        return f"Unitri(mod {self.modulus}, {list(self.data)})"


def permutation(images, degree=None) -> GroupElement:
    images = tuple(int(i) for i in images)
    if degree is not None and len(images) < degree:
        images = images + tuple(range(len(images), degree))
    if sorted(images) != list(range(len(images))):
        raise ValueError(f"not a permutation: {images}")
    return GroupElement(PERM, images, len(images))


def from_cycles(cycles, degree) -> GroupElement:
    """Build a permutation from 0-based cycles, e.g. ``[(0, 1, 2, 3)]``."""
    images = list(range(degree))
    seen = set()
    for cyc in cycles:
        for p in cyc:
            if not 0 <= p < degree or p in seen:
                raise ValueError(f"bad cycle {cyc} for degree {degree}")
            seen.add(p)
        for i, p in enumerate(cyc):
            images[p] = cyc[(i + 1) % len(cyc)]
    return GroupElement(PERM, tuple(images), degree)


def unitriangular(entries, dim, modulus) -> GroupElement:
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    entries = [int(v) % modulus for v in entries]
    if len(entries) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries, got {len(entries)}")
    for i in range(dim):
        for j in range(dim):
            v = entries[i * dim + j]
            if i == j and v != 1:
                raise ValueError("diagonal entries must be 1")
            if i > j and v != 0:
                raise ValueError("entries below the diagonal must be 0")
    return GroupElement(UNITRI, tuple(entries), dim, modulus)


def identity_like(x: GroupElement) -> GroupElement:
    if x.kind == PERM:
        return GroupElement(PERM, tuple(range(x.dim)), x.dim)
    d = x.dim
    return GroupElement(
        UNITRI, tuple(1 if i % (d + 1) == 0 else 0 for i in range(d * d)), d, x.modulus
    )


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    return x * y


def inverse(x: GroupElement) -> GroupElement:
    return x.inverse()


def power(x: GroupElement, k: int) -> GroupElement:
    """Square-and-multiply power; negative ``k`` inverts first."""
    if k < 0:
        x, k = x.inverse(), -k
    result = identity_like(x)
    base = x
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def commutator(x: GroupElement, y: GroupElement) -> GroupElement:
    """``[x, y] = x^-1 y^-1 x y``."""
    return x.inverse() * y.inverse() * x * y


def conjugate(x: GroupElement, y: GroupElement) -> GroupElement:
    """``x^y = y^-1 x y``."""
    return y.inverse() * x * y


def cycles(x: GroupElement):
    """Nontrivial cycles of a permutation, 0-based, each starting at its least point."""
    seen = set()
    out = []
    for start in range(x.dim):
        if start in seen or x.data[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = x.data[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = x.data[j]
        out.append(tuple(cyc))
    return out


def format_cycles(x: GroupElement, one_based=True) -> str:
    shift = 1 if one_based else 0
    cs = cycles(x)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(p + shift) for p in c) + ")" for c in cs)


def element_order(x: GroupElement) -> int:
    if x.kind == PERM:
        k = 1
        for c in cycles(x):
            k = _lcm(k, len(c))
        return k
    one = identity_like(x)
    y, k = x, 1
    while y != one:
        y = y * x
        k += 1
    return k

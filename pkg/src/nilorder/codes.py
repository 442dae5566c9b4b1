"""Integer codes for unitriangular matrices, with vectorized arithmetic.

An element of UT(d, Z/q) is coded as ``sum_t digit_t * q^t`` over its
strictly upper entries in row-major order, so the identity is code 0. The
codes let groups too large for a dense table be handled arithmetically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .elements import UNITRI, GroupElement


@dataclass(frozen=True)
class UnitriCodec:
    dim: int
    modulus: int

    @cached_property
    def positions(self):
        return [(i, j) for i in range(self.dim) for j in range(i + 1, self.dim)]

    @cached_property
    def slot(self):
        return {p: t for t, p in enumerate(self.positions)}

    @cached_property
    def weights(self):
        return np.array([self.modulus ** t for t in range(len(self.positions))], dtype=np.int64)

    @property
    def size(self) -> int:
        return self.modulus ** len(self.positions)

    def encode(self, x: GroupElement) -> int:
        d, q = self.dim, self.modulus
        if x.kind != UNITRI or x.dim != d or x.modulus != q:
            raise ValueError(f"{x!r} is not in UT({d}, Z/{q})")
        return sum(int(x.data[i * d + j]) * q ** t for t, (i, j) in enumerate(self.positions))

    def decode(self, code: int) -> GroupElement:
        d, q = self.dim, self.modulus
        data = [int(i == j) for i in range(d) for j in range(d)]
        for i, j in self.positions:
            data[i * d + j] = code % q
            code //= q
        return GroupElement(UNITRI, tuple(data), d, q)

    def digits(self, codes):
        # 32-bit division is several times faster when the codes fit
        dtype = np.uint32 if self.size <= 2**32 else np.int64
        codes = np.asarray(codes).astype(dtype)
        q = dtype(self.modulus)
        out = np.empty(codes.shape + (len(self.positions),), dtype=np.int64)
        for t in range(len(self.positions)):
            out[..., t] = codes % q
            codes = codes // q
        return out

    def mul(self, X, Y):
        """Elementwise product of coded arrays."""
        dx, dy = self.digits(X), self.digits(Y)
        q, slot = self.modulus, self.slot
        out = np.zeros(np.broadcast_shapes(dx.shape[:-1], dy.shape[:-1]), dtype=np.int64)
        for (i, j), t in slot.items():
            s = dx[..., t] + dy[..., t]
            for l in range(i + 1, j):
                s = s + dx[..., slot[i, l]] * dy[..., slot[l, j]]
            out += (s % q) * self.weights[t]
        return out

    def pow(self, X, k: int):
        """``X^k`` elementwise for a nonnegative integer ``k``."""
        X = np.asarray(X, dtype=np.int64)
        out = np.zeros_like(X)
        while k:
            if k & 1:
                out = self.mul(out, X)
            k >>= 1
            if k:
                X = self.mul(X, X)
        return out


def codec_for(G):
    """A codec for ``G`` if its elements are unitriangular matrices, else ``None``."""
    one = G.identity
    if one.kind != UNITRI:
        return None
    return UnitriCodec(one.dim, one.modulus)


class TableOps:
    """Vectorized group operations on element indices through a dense table."""

    def __init__(self, table):
        self.t = table

    def mul(self, X, Y):
        return self.t.mul[X, Y]

    def inv(self, X):
        return self.t.inv[X]

    def pow(self, X, k):
        return self.t.powers[X, k % self.t.exponent]


class CodeOps:
    """Vectorized group operations on unitriangular codes."""

    def __init__(self, codec: UnitriCodec, exponent: int):
        self.codec = codec
        self.exponent = exponent

    def mul(self, X, Y):
        return self.codec.mul(X, Y)

    def inv(self, X):
        return self.codec.pow(X, self.exponent - 1)

    def pow(self, X, k):
        return self.codec.pow(X, k % self.exponent)

"""Dense integer tables of a finite group, the input format of the pair kernels."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GroupTooLarge

TABLE_CAP = 4096


@dataclass(frozen=True)
class GroupTable:
    """Index-level view of a group; element 0 is the identity.

    ``powers[x, k] = x^k`` for ``0 <= k < exponent``; any power is
    ``powers[x, k % exponent]``.
    """

    mul: np.ndarray
    inv: np.ndarray
    orders: np.ndarray
    powers: np.ndarray
    exponent: int

    @property
    def size(self) -> int:
        return self.mul.shape[0]


def build_table(G, cap=TABLE_CAP) -> GroupTable:
    N = G.order
    if N > cap:
        raise GroupTooLarge(cap)
    elements, index = G.elements, G.index
    right = np.empty((len(G.generators), N), dtype=np.int32)
    for k, g in enumerate(G.generators):
        right[k] = [index[x * g] for x in elements]
    mul = np.empty((N, N), dtype=np.int32)
    mul[:, 0] = np.arange(N, dtype=np.int32)
    # column i from its BFS parent: x * (y g) = (x y) g
    for i in range(1, N):
        j, k = G._parents[i]
        mul[:, i] = right[k][mul[:, j]]
    inv = np.argmax(mul == 0, axis=1).astype(np.int32)

    ident = np.arange(N, dtype=np.int32)
    cols = [np.zeros(N, dtype=np.int32)]
    orders = np.zeros(N, dtype=np.int32)
    cur = np.zeros(N, dtype=np.int32)
    k = 0
    while True:
        k += 1
        cur = mul[cur, ident]
        newly = (cur == 0) & (orders == 0)
        orders[newly] = k
        if not cur.any():
            break
        cols.append(cur.copy())
    exponent = k
    powers = np.ascontiguousarray(np.stack(cols, axis=1), dtype=np.int32)
    return GroupTable(
        mul=np.ascontiguousarray(mul),
        inv=inv,
        orders=orders,
        powers=powers,
        exponent=exponent,
    )

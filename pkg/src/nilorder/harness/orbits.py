"""Ordered pairs up to simultaneous conjugation, with exact orbit sizes.

Every per-pair quantity the sweeps compute is invariant under
``(a, b) -> (a^g, b^g)``. The orbits of this action are enumerated as
``(a, b)`` with ``a`` a conjugacy-class representative and ``b`` a
representative of a ``C(a)``-orbit on ``G``; the orbit of ``(a, b)`` has
``|class(a)| * |b^C(a)|`` elements, and the sizes must add up to ``|G|^2``.
"""

from __future__ import annotations

import numpy as np

from ..errors import InternalInconsistency

CENTRALIZER_DRAWS = 4


def orbit_labels(perms, N):
    """Smallest index in each point's orbit under the group generated by ``perms``."""
    labels = np.arange(N)
    while True:
        new = labels
        for p in perms:
            new = np.minimum(new, new[p])
        new = new[new]
        if np.array_equal(new, labels):
            return labels
        labels = new


class PairOrbits:
    """Enumerate pair orbits of ``G`` through vectorized ``ops`` on ``handles``.

    ``handles[i]`` is the operand the ops act on for element ``i`` (an index
    or an integer code); ``to_index`` maps handle arrays back to indices.
    """

    def __init__(self, G, handles, ops, to_index):
        self.G = G
        self.N = G.order
        self.h = np.asarray(handles, dtype=np.int64)
        self.ops = ops
        self.to_index = to_index

    def conj_perm(self, x):
        """Index permutation ``y -> x^-1 y x``."""
        ops = self.ops
        xi = ops.inv(np.int64(x))
        return self.to_index(ops.mul(ops.mul(xi, self.h), x))

    def _generators(self, members):
        """A few elements of the subgroup with index set ``members``, drawn with a fixed seed.

        They need not generate the whole subgroup: orbits of a smaller
        subgroup only split the pair orbits, and the split parts still carry
        their exact sizes, so the enumeration stays a weighted partition.
        """
        rng = np.random.default_rng(len(members) * self.N + int(members[1]))
        return [self.h[i] for i in rng.choice(members, size=min(CENTRALIZER_DRAWS, len(members)),
                                              replace=False)]

    def enumerate(self):
        """Arrays ``(a_idx, b_idx, weight)`` with one row per pair orbit."""
        N = self.N
        gens = [self.h[self.G.index[g]] for g in self.G.generators]
        class_labels = orbit_labels([self.conj_perm(g) for g in gens], N)
        reps, class_sizes = np.unique(class_labels, return_counts=True)
        a_out, b_out, w_out = [], [], []
        for a, size in zip(reps.tolist(), class_sizes.tolist()):
            ha = self.h[a]
            mask = self.ops.mul(ha, self.h) == self.ops.mul(self.h, ha)
            members = np.nonzero(mask)[0]
            if len(members) == N:
                labels = class_labels
            else:
                cgens = self._generators(members)
                labels = orbit_labels([self.conj_perm(g) for g in cgens], N)
            b_reps, b_sizes = np.unique(labels, return_counts=True)
            a_out.append(np.full(len(b_reps), a, dtype=np.int64))
            b_out.append(b_reps.astype(np.int64))
            w_out.append(size * b_sizes.astype(np.int64))
        a_idx, b_idx, w = np.concatenate(a_out), np.concatenate(b_out), np.concatenate(w_out)
        if int(w.sum()) != N * N:
            raise InternalInconsistency(f"pair orbit sizes add up to {int(w.sum())}, not {N * N}")
        return a_idx, b_idx, w

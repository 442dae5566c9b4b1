"""Per-pair rows computed from group elements directly (no tables).

Produces the same columns as the table kernels; used for groups too large
to tabulate and as an independent cross-check of the kernels.
"""

from __future__ import annotations

import numpy as np

from ..elements import commutator, element_order, power
from ..groups import cyclic_intersection, cyclic_subgroup
from ..kernel_columns import NCOLS
from ..order import mutual_order


def _commuting_powers(a, b):
    """(least k >= 1 with a^k b = b a^k, number of powers of a commuting with b)."""
    count, least = 0, 0
    for i, x in enumerate(cyclic_subgroup(a)):
        if x * b == b * x:
            count += 1
            if i and not least:
                least = i
    return least or element_order(a), count


def element_pair_row(a, b):
    m, n = element_order(a), element_order(b)
    ab = a * b
    mo = mutual_order(a, b)
    data = cyclic_intersection(a, b)
    c = commutator(b, a)
    r = element_order(c)
    ce_ab, cen_ab = _commuting_powers(a, b)
    ce_ba, cen_ba = _commuting_powers(b, a)
    x = power(a, r) * power(b, r)
    xy = x * power(c, r * (r - 1) // 2)
    witness = 0
    if r % 2 == 0 and mo % 2 == 0:
        witness = int(power(a, mo // 2) * power(b, mo // 2) == power(c, r // 2))
    return (
        m, n, element_order(ab), mo, data.e, data.v, r, ce_ab, ce_ba, cen_ab, cen_ba,
        element_order(x), element_order(xy), witness,
        element_order(commutator(a, b)), int(ab == b * a),
    )


def element_pair_rows(G, a_idx, b_idx):
    out = np.zeros((len(a_idx), NCOLS), dtype=np.int64)
    els = G.elements
    for k, (i, j) in enumerate(zip(a_idx, b_idx)):
        out[k] = element_pair_row(els[int(i)], els[int(j)])
    return out

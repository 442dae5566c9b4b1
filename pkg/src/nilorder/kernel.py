"""Pair-kernel backend selection.

The compiled extension is used when importable; setting the environment
variable ``NILORDER_PURE=1`` forces the pure-Python fallback.
"""

import os

from . import _pykernel
from .kernel_columns import COL, COLUMNS, NCOLS

try:
    if os.environ.get("NILORDER_PURE"):
        raise ImportError("pure-Python backend requested")
    from . import _kernel as _backend

    BACKEND = "compiled"
except ImportError:
    _backend = _pykernel
    BACKEND = "python"

__all__ = [
    "BACKEND", "COL", "COLUMNS", "NCOLS", "pair_rows", "table_pair_rows",
    "unitri_mutual_orders", "unitri_pair_rows",
]


def _impl(backend):
    impl = {"python": _pykernel, None: _backend}.get(backend)
    if impl is None:
        from . import _kernel as impl
    return impl


def pair_rows(table, a_idx, b_idx, backend=None):
    """Per-pair order data (see :data:`COLUMNS`) for index arrays ``a_idx``, ``b_idx``."""
    return _impl(backend).pair_rows(
        table.mul, table.inv, table.orders, table.powers, table.exponent, a_idx, b_idx
    )


def table_pair_rows(table, backend=None):
    """Rows for every ordered pair, in row-major ``(a, b)`` order."""
    import numpy as np

    N = table.size
    a_idx = np.repeat(np.arange(N, dtype=np.int64), N)
    b_idx = np.tile(np.arange(N, dtype=np.int64), N)
    return pair_rows(table, a_idx, b_idx, backend=backend)


def _codes(x):
    import numpy as np

    return np.ascontiguousarray(x, dtype=np.int64)


def unitri_pair_rows(codec, exponent, a_codes, b_codes, backend=None):
    """Rows for pairs of unitriangular codes, computed without a table."""
    impl = _impl(backend)
    if impl is _pykernel:
        return impl.unitri_pair_rows(codec, exponent, a_codes, b_codes)
    return impl.unitri_pair_rows(codec.modulus, codec.dim, exponent, _codes(a_codes), _codes(b_codes))


def unitri_mutual_orders(codec, exponent, a_codes, b_codes, backend=None):
    """Only the ``mo`` column of :func:`unitri_pair_rows`."""
    impl = _impl(backend)
    if impl is _pykernel:
        return impl.unitri_mutual_orders(codec, exponent, a_codes, b_codes)
    return impl.unitri_mutual_orders(codec.modulus, codec.dim, exponent, _codes(a_codes), _codes(b_codes))

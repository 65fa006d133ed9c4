"""Pure-numpy fallback for the hot enumeration kernels.

Same contracts as the compiled backend in ``_speedups.pyx``:

* ``weights``          -- batched codeword weights over a column multiset
* ``masks``            -- packed per-message bitmasks over the columns
* ``find_containment`` -- first (j, i) with mask_j a subset of mask_i
"""

from __future__ import annotations

import numpy as np


def _dots(cols, msgs, mul, add):
    """(m, E) inner products of every message with every column."""
    m = msgs.shape[0]
    E, k = cols.shape
    acc = np.zeros((m, E), dtype=np.int16)
    for t in range(k):
        prod = mul[msgs[:, t][:, None], cols[None, :, t]]
        acc = add[acc, prod]
    return acc


def weights(cols, mults, msgs, mul, add):
    """int64[m]: sum of multiplicities over columns with nonzero product."""
    nz = _dots(cols, msgs, mul, add) != 0
    return nz.astype(np.int64) @ mults


def masks(cols, msgs, mul, add, set_on_zero=False):
    """uint8[m, ceil(E/8)] little-bit-order packed masks.

    Bit j set when the inner product with column j is nonzero (the
    codeword support), or zero when ``set_on_zero`` (hyperplane
    membership).
    """
    d = _dots(cols, msgs, mul, add)
    bits = (d == 0) if set_on_zero else (d != 0)
    return np.packbits(bits, axis=1, bitorder="little")


def find_containment(mask_arr):
    """First pair (j, i), j != i, with mask_j subset of mask_i.

    Scan order: i ascending, then j ascending; returns None when no
    containment exists.
    """
    m = mask_arr.shape[0]
    for i in range(m):
        stray = (mask_arr & ~mask_arr[i]).any(axis=1)
        cand = np.flatnonzero(~stray)
        for j in cand:
            if j != i:
                return int(j), int(i)
    return None

"""Kernel dispatch: compiled extension when available, numpy fallback otherwise.

Set MINCODE_PURE=1 to force the fallback (used by the benchmark and the
backend-equivalence tests).  Results are identical either way.

Also hosts the message-space generators shared by the code and blocking
modules: chunked enumeration of GF(q)^r tuples placed at chosen
coordinate positions, optionally restricted to projective (leading-one)
representatives.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernels_py

if os.environ.get("MINCODE_PURE"):
    _impl = _kernels_py
    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "pure"

CHUNK = 1 << 14


def _lambda_chunk(q, r, lo, hi):
    """Tuples with base-q index in [lo, hi); first coordinate most significant."""
    idx = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((idx.size, r), dtype=np.int16)
    rem = idx
    for pos in range(r - 1, -1, -1):
        out[:, pos] = rem % q
        rem = rem // q
    return out

def iter_lambda_chunks(q, r, projective=False, include_zero=False, chunk=CHUNK):
    """Yield (m, r) int16 arrays covering GF(q)^r in index order.

    projective=True keeps only leading-one representatives, one per
    projective point, still in ascending index (= lexicographic) order.
    """
    total = q ** r
    lo = 0 if (include_zero and not projective) else 1
    while lo < total:
        hi = min(lo + chunk, total)
        arr = _lambda_chunk(q, r, lo, hi)
        if projective:
            nz = arr != 0
            first = nz.argmax(axis=1)
            lead = arr[np.arange(arr.shape[0]), first]
            arr = arr[(lead == 1) & nz.any(axis=1)]
        if arr.size:
            yield arr
        lo = hi


def place(lam, positions, k):
    """Expand (m, r) coordinate tuples into full (m, k) messages."""
    out = np.zeros((lam.shape[0], k), dtype=np.int16)
    out[:, positions] = lam
    return out


def _chunked(fn, msgs, threads):
    if threads <= 1 or msgs.shape[0] <= CHUNK:
        return fn(msgs)
    parts = [msgs[i:i + CHUNK] for i in range(0, msgs.shape[0], CHUNK)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(fn, parts))
    return np.concatenate(results)


def weights(cols, mults, msgs, mul, add, threads=1):
    return _chunked(lambda m: _impl.weights(cols, mults, m, mul, add),
                    np.ascontiguousarray(msgs), threads)


def masks(cols, msgs, mul, add, set_on_zero=False, threads=1):
    return _chunked(lambda m: _impl.masks(cols, m, mul, add, set_on_zero),
                    np.ascontiguousarray(msgs), threads)


def find_containment(mask_arr):
    return _impl.find_containment(np.ascontiguousarray(mask_arr))

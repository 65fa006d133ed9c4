"""Enumeration kernels: fallback/compiled equivalence and semantics."""

import os
import random
import subprocess
import sys

import numpy as np
import pytest

from mincode import kernels
from mincode import _kernels_py
from mincode.gf import field_from_order
from mincode.linalg import projective_points

try:
    from mincode import _speedups
except ImportError:
    _speedups = None

BACKENDS = [_kernels_py] + ([_speedups] if _speedups is not None else [])


def random_problem(rng, q, k, n_cols, n_msgs):
    F = field_from_order(q)
    cols = np.array([[rng.randrange(q) for _ in range(k)]
                     for _ in range(n_cols)], dtype=np.int16)
    mults = np.array([rng.randint(1, 3) for _ in range(n_cols)], dtype=np.int64)
    msgs = np.array([[rng.randrange(q) for _ in range(k)]
                     for _ in range(n_msgs)], dtype=np.int16)
    return F, cols, mults, msgs


def test_backend_reported():
    assert kernels.BACKEND in ("compiled", "pure")


def test_pure_env_forces_fallback():
    out = subprocess.run(
        [sys.executable, "-c", "from mincode import BACKEND; print(BACKEND)"],
        env={**os.environ, "MINCODE_PURE": "1"},
        capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "pure"


def test_weights_against_scalar_oracle():
    rng = random.Random(83)
    for q in (2, 3, 4, 9):
        F, cols, mults, msgs = random_problem(rng, q, 3, 8, 30)
        mul, add = F.mul_table, F.add_table
        ws = kernels.weights(cols, mults, msgs, mul, add)
        for vi, v in enumerate(msgs):
            want = 0
            for ci, g in enumerate(cols):
                acc = 0
                for a, b in zip(v, g):
                    acc = F.add(acc, F.mul(int(a), int(b)))
                if acc != 0:
                    want += int(mults[ci])
            assert ws[vi] == want


def test_masks_semantics():
    rng = random.Random(89)
    for q in (2, 5):
        F, cols, _, msgs = random_problem(rng, q, 4, 11, 20)
        mul, add = F.mul_table, F.add_table
        for set_on_zero in (False, True):
            m = kernels.masks(cols, msgs, mul, add, set_on_zero=set_on_zero)
            bits = np.unpackbits(m, axis=1, bitorder="little",
                                 count=cols.shape[0])
            for vi, v in enumerate(msgs):
                for ci, g in enumerate(cols):
                    acc = 0
                    for a, b in zip(v, g):
                        acc = F.add(acc, F.mul(int(a), int(b)))
                    want = (acc == 0) if set_on_zero else (acc != 0)
                    assert bool(bits[vi, ci]) == want


def brute_containment(mask_arr, nbits):
    bits = np.unpackbits(mask_arr, axis=1, bitorder="little", count=nbits)
    sets = [frozenset(np.flatnonzero(row)) for row in bits]
    for i in range(len(sets)):
        for j in range(len(sets)):
            if j != i and sets[j] <= sets[i]:
                return (j, i)
    return None


def test_find_containment_oracle():
    rng = random.Random(97)
    for _ in range(30):
        n, nbits = rng.randint(2, 12), rng.randint(1, 20)
        raw = np.array([[rng.randrange(2) for _ in range(nbits)]
                        for _ in range(n)], dtype=np.uint8)
        packed = np.packbits(raw, axis=1, bitorder="little")
        got = kernels.find_containment(packed)
        want = brute_containment(packed, nbits)
        assert got == want


def test_backends_agree():
    rng = random.Random(101)
    for q in (2, 3, 4):
        F, cols, mults, msgs = random_problem(rng, q, 4, 9, 40)
        mul, add = F.mul_table, F.add_table
        results = []
        for impl in BACKENDS:
            w = impl.weights(cols, mults, msgs, mul, add)
            m0 = impl.masks(cols, msgs, mul, add, False)
            m1 = impl.masks(cols, msgs, mul, add, True)
            results.append((w.tolist(), m0.tobytes(), m1.tobytes(),
                            impl.find_containment(np.ascontiguousarray(m0))))
        for r in results[1:]:
            assert r == results[0]


@pytest.mark.skipif(_speedups is None, reason="compiled extension unavailable")
def test_compiled_backend_present():
    assert kernels.BACKEND == "compiled" or os.environ.get("MINCODE_PURE")


def test_lambda_enumeration_order_and_projective_filter():
    for q, r in [(2, 4), (3, 3), (4, 2)]:
        F = field_from_order(q)
        full = np.concatenate(list(kernels.iter_lambda_chunks(q, r, chunk=7)))
        assert full.shape == (q ** r - 1, r)
        # ascending base-q index order, zero excluded
        idx = [int("".join(map(str, row)), q) if q <= 10 else None
               for row in full.tolist()]
        assert idx == sorted(idx) and idx[0] == 1
        proj = np.concatenate(
            list(kernels.iter_lambda_chunks(q, r, projective=True, chunk=7)))
        assert [tuple(row) for row in proj.tolist()] == projective_points(F, r)
        withz = np.concatenate(
            list(kernels.iter_lambda_chunks(q, r, include_zero=True)))
        assert withz.shape[0] == q ** r


def test_place():
    lam = np.array([[1, 2], [0, 1]], dtype=np.int16)
    out = kernels.place(lam, [1, 3], 4)
    assert out.tolist() == [[0, 1, 0, 2], [0, 0, 0, 1]]


def test_threaded_chunking_deterministic():
    rng = random.Random(103)
    # more messages than one chunk, so the threaded path actually splits
    F, cols, mults, msgs = random_problem(rng, 3, 4, 10,
                                          kernels.CHUNK + 5000)
    mul, add = F.mul_table, F.add_table
    w1 = kernels.weights(cols, mults, msgs, mul, add, threads=1)
    w4 = kernels.weights(cols, mults, msgs, mul, add, threads=4)
    assert np.array_equal(w1, w4)

"""Shared helpers for the test suite."""

import itertools
import random

from mincode.gf import field_from_order
from mincode.linalg import VectorMultiset, projective_points


def all_vectors(q, k, include_zero=False):
    """Every vector of GF(q)^k as a tuple of encoded elements."""
    for v in itertools.product(range(q), repeat=k):
        if include_zero or any(v):
            yield v


def random_multiset(rng: random.Random, q, k, min_size=None, max_size=None):
    """A random multiset of nonzero vectors (duplicates allowed)."""
    lo = min_size if min_size is not None else k
    hi = max_size if max_size is not None else 4 * k
    F = field_from_order(q)
    size = rng.randint(lo, hi)
    vecs = []
    while len(vecs) < size:
        v = tuple(rng.randrange(q) for _ in range(k))
        if any(v):
            vecs.append(v)
    return VectorMultiset(F, k, vecs)


def random_projective_set(rng: random.Random, q, k, min_size=None, max_size=None):
    """A random set of distinct projective-point representatives."""
    F = field_from_order(q)
    pts = projective_points(F, k)
    lo = min_size if min_size is not None else k
    hi = min(len(pts), max_size if max_size is not None else 4 * k)
    size = rng.randint(min(lo, hi), hi)
    return VectorMultiset(F, k, rng.sample(pts, size))

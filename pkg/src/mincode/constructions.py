"""Defining-set generators for the hyperplane-union and lifted families,
their closed-form weight distributions, and the counting helpers behind
the weight-distribution proofs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from . import linalg
from .code import WeightDistribution
from .errors import (AmbientMismatch, BadIndex, BadRange, CoversWholeSpace,
                     EmptyS, UnsupportedFamily, ZeroVector)
from .gf import FieldSpec, field_from_order
from .linalg import VectorMultiset, project_multiset


@dataclass
class LinearForm:
    """a . x + b; b = 0 for linear forms."""
    a: tuple
    b: int = 0

    def __post_init__(self):
        if not any(self.a):
            raise ZeroVector("linear form needs a nonzero dual vector")


def _space(field: FieldSpec, k: int, include_zero=False):
    it = itertools.product(range(field.q), repeat=k)
    for v in it:
        if include_zero or any(v):
            yield v


def hyperplane_union(field: FieldSpec, k: int, S) -> VectorMultiset:
    """Union of the hyperplanes dual to S, zero removed; multiplicity 1."""
    S = [tuple(a) for a in S]
    if not S:
        raise EmptyS("S must be nonempty")
    for a in S:
        if len(a) != k or not any(a):
            raise ZeroVector(f"invalid dual vector {a}")
    out = [v for v in _space(field, k)
           if any(linalg.dot(field, a, v) == 0 for a in S)]
    if len(out) == field.q ** k - 1:
        raise CoversWholeSpace("the hyperplane union covers the whole space")
    return VectorMultiset(field, k, out)


def hyperplane_union_is_cutting(field: FieldSpec, S) -> bool:
    """Cutting verdict for a hyperplane union: Span(S) at least 3-dimensional."""
    return linalg.span_dim(field, [tuple(a) for a in S]) >= 3


def forms_product_set(field: FieldSpec, k: int, forms) -> VectorMultiset:
    """{x != 0 : product of the linear forms vanishes}.

    Identical to hyperplane_union of the forms' dual vectors; this is the
    parameterization used to tabulate the open-problem families numerically.
    """
    duals = []
    for f in forms:
        if isinstance(f, LinearForm):
            if f.b != 0:
                raise BadRange("forms_product_set takes linear forms (b = 0)")
            duals.append(f.a)
        else:
            duals.append(tuple(f))
    return hyperplane_union(field, k, duals)


def monomial_zero_set(q: int, k: int, h: int) -> VectorMultiset:
    """{x != 0 : x_1 * ... * x_h = 0}; size (q^h - (q-1)^h) q^(k-h) - 1."""
    if not 3 <= h <= k:
        raise BadRange(f"need 3 <= h <= k, got h={h}, k={k}")
    field = field_from_order(q)
    out = [v for v in _space(field, k) if any(x == 0 for x in v[:h])]
    return VectorMultiset(field, k, out)


def monomial_plus_sum_set(q: int, k: int, h: int) -> VectorMultiset:
    """{x != 0 : x_1 ... x_h (x_1 + ... + x_h) = 0}."""
    if not 3 <= h <= k:
        raise BadRange(f"need 3 <= h <= k, got h={h}, k={k}")
    field = field_from_order(q)
    out = []
    for v in _space(field, k):
        if any(x == 0 for x in v[:h]):
            out.append(v)
            continue
        acc = 0
        for x in v[:h]:
            acc = field.add(acc, x)
        if acc == 0:
            out.append(v)
    return VectorMultiset(field, k, out)


def weight_range_set(q: int, k: int, mode: str, h: int) -> VectorMultiset:
    """Vectors with Hamming weight in [1, h] (at_most) or [h, k] (at_least)."""
    field = field_from_order(q)
    if mode == "at_most":
        if not 2 <= h <= k:
            raise BadRange(f"at_most needs 2 <= h <= k, got h={h}, k={k}")
        keep = lambda w: 1 <= w <= h
    elif mode == "at_least":
        if not 1 <= h <= k - 1:
            raise BadRange(f"at_least needs 1 <= h <= k-1, got h={h}, k={k}")
        keep = lambda w: w >= h
    else:
        raise BadRange(f"unknown mode {mode!r}")
    out = [v for v in _space(field, k)
           if keep(sum(1 for x in v if x != 0))]
    return VectorMultiset(field, k, out)


def scaled_basis_set(q: int, k: int) -> VectorMultiset:
    """{a e_i : a in GF(q), 1 <= i <= k-1} in GF(q)^(k-1), zero included once.

    The one generator that admits the zero vector: the lift consumes it
    before any zero-exclusion applies (zero maps to (0,...,0,1)).
    """
    if k < 3:
        raise BadRange(f"need k >= 3, got k={k}")
    field = field_from_order(q)
    m = k - 1
    vecs = {(0,) * m}
    for i in range(m):
        for a in range(1, q):
            v = [0] * m
            v[i] = a
            vecs.add(tuple(v))
    return VectorMultiset(field, m, vecs, _allow_zero=True)


def lift(D1: VectorMultiset, D2: VectorMultiset) -> VectorMultiset:
    """{(x,1) : x in D1} union {(x,0) : x in D2} inside GF(q)^(k+1)."""
    D1.same_ambient(D2)
    field, k = D1.field, D1.k
    entries = [(v + (1,), m) for v, m in D1.entries]
    entries += [(v + (0,), m) for v, m in D2.entries if any(v)]
    return VectorMultiset(field, k + 1, entries)


def is_scale_closed(D: VectorMultiset) -> bool:
    """D = a.D for every nonzero scalar a (zero entry, if any, ignored)."""
    field = D.field
    mults = dict(D.entries)
    for v, m in D.entries:
        if not any(v):
            continue
        for a in range(2, field.q):
            w = linalg.scale(field, a, v)
            if mults.get(w) != m:
                return False
    return True


def scale_closed_hull(D: VectorMultiset) -> VectorMultiset:
    """{a x : a nonzero scalar, x in D}, as a set."""
    field = D.field
    out = set()
    for v in D.support_vectors():
        for a in range(1, field.q):
            out.add(linalg.scale(field, a, v))
    return VectorMultiset(field, D.k, out)


def is_affine_blocking(D: VectorMultiset) -> bool:
    """D meets every affine hyperplane a.x = b."""
    field, k = D.field, D.k
    pts = list(D.support_vectors())  # includes the zero vector if present
    for a in linalg.projective_points(field, k):
        hit = {linalg.dot(field, a, v) for v in pts}
        if len(hit) < field.q:
            return False
    return True


def lift_guarantee(D1: VectorMultiset, D2: VectorMultiset) -> Optional[str]:
    """Which sufficient condition (if any) certifies the lift minimal.

    "cutting-pair": D1 and D2 both cutting and D1 scale-closed.
    "affine-blocking": D2 cutting and D1 an affine blocking set.
    """
    from .blocking import is_cutting_definition
    if not is_cutting_definition(D2).is_cutting:
        return None
    if is_scale_closed(D1) and not D1.contains_zero() \
            and is_cutting_definition(D1).is_cutting:
        return "cutting-pair"
    if is_affine_blocking(D1):
        return "affine-blocking"
    return None


# ---------------------------------------------------------------------------
# Closed-form weight distributions
# ---------------------------------------------------------------------------

def _merge(rows, dim, q):
    counts = {}
    for w, c in rows:
        c = int(c)
        if c <= 0:
            continue
        w = Fraction(w)
        if w.denominator != 1:
            raise AssertionError(f"non-integer weight {w}")
        counts[int(w)] = counts.get(int(w), 0) + c
    return WeightDistribution(counts, dim, q)


def predicted_weight_distribution(family: str, q: int, k: int, h: int = 3) -> WeightDistribution:
    """Closed-form distributions for the monomial families.

    Families: "monomial", "monomial_projective", "monomial_plus_sum_h3"
    (h fixed at 3 for the last one).
    """
    Q = Fraction(q)
    if family == "monomial":
        if not 3 <= h <= k:
            raise BadRange(f"need 3 <= h <= k, got h={h}, k={k}")
        common = (q - 1) * Q ** (k - h - 1) * (Q ** h - (Q - 1) ** h)
        rows = [(common, q ** k - q ** h)]
        for s in range(1, h + 1):
            w = common + (-1) ** s * Q ** (k - h - 1) * (Q - 1) ** (h - s + 1)
            rows.append((w, (q - 1) ** s * comb(h, s)))
        return _merge(rows, k, q)
    if family == "monomial_projective":
        if not 3 <= h <= k:
            raise BadRange(f"need 3 <= h <= k, got h={h}, k={k}")
        common = Q ** (k - h - 1) * (Q ** h - (Q - 1) ** h)
        rows = [(common, q ** k - q ** h)]
        for s in range(1, h + 1):
            w = common + (-1) ** s * Q ** (k - h - 1) * (Q - 1) ** (h - s)
            rows.append((w, (q - 1) ** s * comb(h, s)))
        return _merge(rows, k, q)
    if family == "monomial_plus_sum_h3":
        if h != 3:
            raise BadRange("the closed form is only known for h = 3")
        if k < 3:
            raise BadRange(f"need k >= 3, got k={k}")
        rows = [
            (3 * Q ** (k - 1) - 6 * Q ** (k - 2) + 3 * Q ** (k - 3), 4 * (q - 1)),
            (4 * Q ** (k - 1) - 10 * Q ** (k - 2) + 6 * Q ** (k - 3),
             (q - 1) * (q - 2) * (q - 3)),
            (4 * Q ** (k - 1) - 10 * Q ** (k - 2) + 9 * Q ** (k - 3) - 3 * Q ** (k - 4),
             q ** k - q ** 3),
            (4 * Q ** (k - 1) - 9 * Q ** (k - 2) + 5 * Q ** (k - 3),
             6 * (q - 1) * (q - 2)),
            (4 * Q ** (k - 1) - 8 * Q ** (k - 2) + 4 * Q ** (k - 3), 3 * (q - 1)),
        ]
        return _merge(rows, k, q)
    raise UnsupportedFamily(f"no closed form for family {family!r}")


# ---------------------------------------------------------------------------
# Counting helpers
# ---------------------------------------------------------------------------

def count_N_aT(a, T, q: int, k: int) -> int:
    """Solutions of {x_j = 0 for j in T; a.x = 0} in GF(q)^k (0-based T).

    For T empty and a nonzero this returns q^(k-1), the plain hyperplane
    count; the Table-1 verification uses the proof's N(a, {}) = 0
    convention instead (handled by its inclusion-exclusion directly).
    """
    T = set(T)
    if any(j < 0 or j >= k for j in T):
        raise BadIndex(f"T={sorted(T)} out of range for k={k}")
    if len(a) != k:
        raise BadIndex(f"dual vector of length {len(a)} in ambient k={k}")
    t = len(T)
    supp = {i for i, x in enumerate(a) if x != 0}
    if supp <= T:
        return q ** (k - t)
    return q ** (k - t - 1)


def count_toric(h: int, b: int, q: int) -> int:
    """|{x in (GF(q)*)^h : x_1 + ... + x_h = b}|."""
    if h < 2:
        raise BadRange(f"need h >= 2, got h={h}")
    if b == 0:
        return ((q - 1) ** h + (-1) ** h * (q - 1)) // q
    return ((q - 1) ** h - (-1) ** h) // q

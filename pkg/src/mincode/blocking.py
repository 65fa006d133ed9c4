"""Blocking and cutting properties of vector multisets.

Hyperplanes are indexed by projective representatives of dual vectors in
canonical sorted order, so witnesses and fold counts are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels, linalg
from .code import LinearCode, MinimalityReport, restrict_to_span, ambient_message
from .errors import NotProjective, TooManySubspaces
from .linalg import VectorMultiset, project_multiset

SUBSPACE_GUARD = 10 ** 6


def theta(s: int, q: int) -> int:
    """Number of points of an s-dimensional projective subspace."""
    return (q ** (s + 1) - 1) // (q - 1)


def gaussian_binomial(k: int, s: int, q: int) -> int:
    """Number of s-dimensional subspaces of GF(q)^k."""
    num = den = 1
    for i in range(s):
        num *= q ** (k - i) - 1
        den *= q ** (s - i) - 1
    return num // den


@dataclass
class BlockingReport:
    s: int
    is_blocking: bool
    fold: int
    witness_subspace: list  # s independent dual vectors attaining the fold

    def to_json(self):
        return {
            "s": self.s,
            "is_blocking": self.is_blocking,
            "fold": self.fold,
            "witness_subspace": [list(a) for a in self.witness_subspace],
        }


@dataclass
class CuttingReport:
    is_cutting: bool
    route: str  # "definition" or "span"
    witness: Optional[tuple]  # (a, a') pair, or (a,) for the span route

    def to_json(self):
        return {
            "is_cutting": self.is_cutting,
            "route": self.route,
            "witness": [list(a) for a in self.witness] if self.witness else None,
        }


def _nonzero_entries(D: VectorMultiset):
    """Entries of D* (zero stripped), as (cols, mults) arrays."""
    entries = [(v, m) for v, m in D.entries if any(v)]
    cols = np.array([v for v, _ in entries], dtype=np.int16)
    mults = np.array([m for _, m in entries], dtype=np.int64)
    return cols, mults


def _dual_reps(D: VectorMultiset):
    pts = linalg.projective_points(D.field, D.k)
    return pts, np.array(pts, dtype=np.int16)


def _iter_rref_matrices(field, k, s):
    """All s x k matrices in reduced row echelon form, full rank s."""
    q = field.q
    for pivots in itertools.combinations(range(k), s):
        free_cells = []
        for i in range(s):
            for j in range(pivots[i] + 1, k):
                if j not in pivots:
                    free_cells.append((i, j))
        for values in itertools.product(range(q), repeat=len(free_cells)):
            mat = [[0] * k for _ in range(s)]
            for i, p in enumerate(pivots):
                mat[i][p] = 1
            for (i, j), val in zip(free_cells, values):
                mat[i][j] = val
            yield [tuple(row) for row in mat]


def fold_multiplicity(D: VectorMultiset, s: int, guard=SUBSPACE_GUARD) -> BlockingReport:
    """Minimum of |D* meet W| over codimension-s subspaces W, with witness."""
    k, q = D.k, D.field.q
    if not 1 <= s <= k:
        raise ValueError(f"codimension s={s} out of range for k={k}")
    count = gaussian_binomial(k, s, q)
    if count > guard:
        raise TooManySubspaces(f"{count} codimension-{s} subspaces exceed guard {guard}")
    cols, mults = _nonzero_entries(D)
    total = int(mults.sum())
    if s == 1:
        pts, msgs = _dual_reps(D)
        mul, add = D.field.mul_table, D.field.add_table
        ws = kernels.weights(cols, mults, msgs, mul, add)
        in_counts = total - ws
        best = int(np.argmin(in_counts))
        fold = int(in_counts[best])
        return BlockingReport(s, fold >= 1, fold, [pts[best]])
    F = D.field
    best_fold, best_witness = None, None
    mul, add = F.mul_table, F.add_table
    for duals in _iter_rref_matrices(F, k, s):
        dual_arr = np.array(duals, dtype=np.int16)
        in_mask = np.ones(cols.shape[0], dtype=bool)
        # element is in W iff every dual form vanishes on it
        for row in range(s):
            d = kernels.masks(cols, dual_arr[row:row + 1], mul, add, set_on_zero=True)
            bits = np.unpackbits(d[0], bitorder="little", count=cols.shape[0])
            in_mask &= bits.astype(bool)
        fold = int(mults[in_mask].sum())
        if best_fold is None or fold < best_fold:
            best_fold, best_witness = fold, duals
            if fold == 0:
                break
    return BlockingReport(s, best_fold >= 1, best_fold, list(best_witness))


def is_cutting_definition(D: VectorMultiset) -> CuttingReport:
    """Definition route: no hyperplane section lies inside another hyperplane."""
    k, q = D.k, D.field.q
    if theta(k - 1, q) > SUBSPACE_GUARD:
        raise TooManySubspaces(f"too many hyperplanes for k={k}, q={q}")
    cols, mults = _nonzero_entries(D)
    pts, msgs = _dual_reps(D)
    mul, add = D.field.mul_table, D.field.add_table
    in_masks = kernels.masks(cols, msgs, mul, add, set_on_zero=True)
    hit = kernels.find_containment(in_masks)
    if hit is not None:
        j, i = hit
        return CuttingReport(False, "definition", (pts[j], pts[i]))
    return CuttingReport(True, "definition", None)


def is_cutting_span(D: VectorMultiset) -> CuttingReport:
    """Span route (projective sets): every hyperplane section spans it."""
    if not linalg.is_projective(D):
        raise NotProjective("span-route cutting check requires a projective set")
    k, q = D.k, D.field.q
    if theta(k - 1, q) > SUBSPACE_GUARD:
        raise TooManySubspaces(f"too many hyperplanes for k={k}, q={q}")
    cols, _ = _nonzero_entries(D)
    vectors = [tuple(int(x) for x in row) for row in cols]
    pts, msgs = _dual_reps(D)
    mul, add = D.field.mul_table, D.field.add_table
    in_masks = kernels.masks(cols, msgs, mul, add, set_on_zero=True)
    nbits = cols.shape[0]
    for idx, a in enumerate(pts):
        bits = np.unpackbits(in_masks[idx], bitorder="little", count=nbits)
        acc = linalg.RankAccumulator(D.field)
        for j in np.flatnonzero(bits):
            if acc.add(vectors[j]) and acc.rank == k - 1:
                break
        if acc.rank < k - 1:
            return CuttingReport(False, "span", (a,))
    return CuttingReport(True, "span", None)


def _is_proportional(field, u, v):
    try:
        return linalg.proj_normalize(field, u) == linalg.proj_normalize(field, v)
    except Exception:
        return False


def is_minimal_cutting(C: LinearCode) -> MinimalityReport:
    """Minimality via the cutting-set characterization of the projection."""
    if C.dim < C.k_ambient:
        C2, basis = restrict_to_span(C)
    else:
        C2, basis = C, None
    Dbar = project_multiset(C2.D)
    rep = is_cutting_span(Dbar)
    if rep.is_cutting:
        return MinimalityReport(True, None, "cutting")
    (a,) = rep.witness
    F = C.field
    members = [v for v in Dbar.support_vectors()
               if linalg.dot(F, a, v) == 0]
    ns = linalg.nullspace(F, members, C2.k_ambient)
    a_prime = next(b for b in ns if not _is_proportional(F, b, a))
    v, vp = a, a_prime  # Supp(c_{a'}) contained in Supp(c_a)
    if basis is not None:
        v = ambient_message(C, basis, v)
        vp = ambient_message(C, basis, vp)
    return MinimalityReport(False, (v, vp), "cutting")

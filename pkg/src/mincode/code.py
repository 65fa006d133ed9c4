"""Linear codes from defining multisets.

Build C_D from an ordered multiset D of nonzero vectors, enumerate exact
weight distributions, and decide minimality by exhaustive support
comparison.  Message enumeration always runs over one representative per
coset of the map kernel, so every codeword appears exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels, linalg
from .errors import DimensionMismatch, EmptyDefiningSet, TooLarge
from .gf import FieldSpec
from .linalg import VectorMultiset

DEFAULT_GUARD = 2 ** 24


class WeightDistribution:
    """Exact weight -> codeword count map; A_0 = 1 is implicit."""

    def __init__(self, counts: dict, dim: int, q: int):
        self.counts = {int(w): int(c) for w, c in counts.items() if c}
        self.dim = dim
        self.q = q

    @property
    def w_min(self) -> int:
        return min(self.counts)

    @property
    def w_max(self) -> int:
        return max(self.counts)

    @property
    def total(self) -> int:
        """Number of codewords including zero."""
        return 1 + sum(self.counts.values())

    def enumerator(self) -> str:
        terms = ["1"] + [
            f"{c}z^{w}" for w, c in sorted(self.counts.items())
        ]
        return " + ".join(terms)

    def to_json(self) -> dict:
        return {str(w): c for w, c in sorted(self.counts.items())}

    def __eq__(self, other):
        if isinstance(other, WeightDistribution):
            return self.counts == other.counts
        return self.counts == {int(w): int(c) for w, c in dict(other).items()}

    def __repr__(self):
        return f"WeightDistribution({self.enumerator()})"


@dataclass
class MinimalityReport:
    is_minimal: bool
    witness: Optional[tuple]  # (v, v') with Supp(c_{v'}) contained in Supp(c_v)
    method: str  # "exhaustive" or "cutting"

    def to_json(self):
        return {
            "is_minimal": self.is_minimal,
            "witness": [list(self.witness[0]), list(self.witness[1])]
            if self.witness else None,
            "method": self.method,
        }


class LinearCode:
    """The code C_D: columns are D in canonical sorted order."""

    def __init__(self, D: VectorMultiset):
        if D.size == 0:
            raise EmptyDefiningSet("defining set is empty")
        self.D = D
        self.field: FieldSpec = D.field
        self.k_ambient = D.k
        self.n = D.size
        rows = list(D.support_vectors())
        self._basis, self._pivots = linalg.rref(self.field, rows)
        self.dim = len(self._pivots)
        self._wd = None

    # messages supported on the pivot columns hit every kernel coset once
    @property
    def message_positions(self):
        return self._pivots

    def __repr__(self):
        return (f"LinearCode(q={self.field.q}, n={self.n}, "
                f"dim={self.dim}, k_ambient={self.k_ambient})")


def build_code(D: VectorMultiset) -> LinearCode:
    return LinearCode(D)


def codeword_of(v, C: LinearCode) -> tuple:
    if len(v) != C.k_ambient:
        raise DimensionMismatch(
            f"message length {len(v)} != ambient dimension {C.k_ambient}")
    F = C.field
    out = []
    for g, m in C.D.entries:
        x = linalg.dot(F, v, g)
        out.extend([x] * m)
    return tuple(out)


def _check_guard(C: LinearCode, guard):
    if guard is None:
        guard = DEFAULT_GUARD
    if C.field.q ** C.k_ambient > guard:
        raise TooLarge(
            f"q^k = {C.field.q}**{C.k_ambient} exceeds the guard {guard}")


def _message_chunks(C: LinearCode, projective):
    q = C.field.q
    for lam in kernels.iter_lambda_chunks(q, C.dim, projective=projective):
        yield kernels.place(lam, C.message_positions, C.k_ambient)


def weight_distribution(C: LinearCode, guard=None, threads=1) -> WeightDistribution:
    """Exact A_w by enumerating q^dim coset representatives."""
    if C._wd is not None:
        return C._wd
    _check_guard(C, guard)
    cols, mults = C.D.columns()
    mul, add = C.field.mul_table, C.field.add_table
    counts = {}
    for msgs in _message_chunks(C, projective=False):
        ws = kernels.weights(cols, mults, msgs, mul, add, threads=threads)
        vals, cnts = np.unique(ws, return_counts=True)
        for w, c in zip(vals, cnts):
            counts[int(w)] = counts.get(int(w), 0) + int(c)
    C._wd = WeightDistribution(counts, C.dim, C.field.q)
    return C._wd


def is_minimal_exhaustive(C: LinearCode, guard=None, threads=1) -> MinimalityReport:
    """Pairwise support-containment scan over projective message reps."""
    _check_guard(C, guard)
    cols, _ = C.D.columns()
    mul, add = C.field.mul_table, C.field.add_table
    mask_parts, msg_parts = [], []
    for msgs in _message_chunks(C, projective=True):
        mask_parts.append(kernels.masks(cols, msgs, mul, add, threads=threads))
        msg_parts.append(msgs)
    mask_arr = np.concatenate(mask_parts)
    hit = kernels.find_containment(mask_arr)
    if hit is None:
        return MinimalityReport(True, None, "exhaustive")
    j, i = hit
    all_msgs = np.concatenate(msg_parts)
    v = tuple(int(x) for x in all_msgs[i])   # container
    vp = tuple(int(x) for x in all_msgs[j])  # contained
    return MinimalityReport(False, (v, vp), "exhaustive")


def ab_condition(C: LinearCode, guard=None) -> bool:
    """Sufficient minimality test: w_min / w_max > (q-1)/q, compared exactly."""
    wd = weight_distribution(C, guard=guard)
    q = C.field.q
    return q * wd.w_min > (q - 1) * wd.w_max


def ab_ratio(C: LinearCode, guard=None) -> Fraction:
    wd = weight_distribution(C, guard=guard)
    return Fraction(wd.w_min, wd.w_max)


def is_projective(C: LinearCode) -> bool:
    return linalg.is_projective(C.D)


def restrict_to_span(C: LinearCode):
    """Re-express C inside Span(D).

    Returns (C', basis): C' is the same code (identical codeword tuples,
    same column order) with full-rank ambient GF(q)^dim; basis rows map
    restricted messages back to ambient ones via solve_linear.
    """
    basis, pivots = C._basis, C._pivots
    new_entries = []
    for g, m in C.D.entries:
        coords = tuple(g[p] for p in pivots)
        new_entries.append((coords, m))
    D2 = VectorMultiset(C.field, C.dim, new_entries)
    return LinearCode(D2), basis


def ambient_message(C: LinearCode, basis, w) -> tuple:
    """Lift a restricted-space message w back to the ambient space of C."""
    v = linalg.solve_linear(C.field, basis, w)
    if v is None:
        raise DimensionMismatch("message does not lift to the ambient space")
    return v

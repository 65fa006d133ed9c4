"""Vectors and multisets over GF(q).

Vectors are plain tuples of encoded field elements; the FieldSpec is
passed contextually.  All operations are pure.
"""

from __future__ import annotations

import numpy as np

from .errors import AmbientMismatch, LengthMismatch, ZeroVector
from .gf import FieldSpec


def dot(field: FieldSpec, v, w) -> int:
    """Standard bilinear form sum(v_i * w_i)."""
    if len(v) != len(w):
        raise LengthMismatch(f"lengths {len(v)} and {len(w)} differ")
    acc = 0
    for a, b in zip(v, w):
        acc = field.add(acc, field.mul(a, b))
    return acc


def weight_support(v):
    """(Hamming weight, set of nonzero coordinate indices), 0-based."""
    support = frozenset(i for i, x in enumerate(v) if x != 0)
    return len(support), support


def scale(field: FieldSpec, a: int, v) -> tuple:
    return tuple(field.mul(a, x) for x in v)


def vec_sub(field: FieldSpec, v, w) -> tuple:
    return tuple(field.sub(a, b) for a, b in zip(v, w))


def proj_normalize(field: FieldSpec, v) -> tuple:
    """Scale so the lowest-index nonzero coordinate is 1."""
    for x in v:
        if x != 0:
            if x == 1:
                return tuple(v)
            return scale(field, field.inv(x), v)
    raise ZeroVector("cannot normalize the zero vector")


class RankAccumulator:
    """Incremental Gaussian elimination; feed vectors, read the rank."""

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows = {}  # leading index -> row with leading coefficient 1

    def add(self, v) -> bool:
        """Reduce v against the basis; returns True if the rank grew."""
        F = self.field
        v = tuple(v)
        while True:
            lead = next((i for i, x in enumerate(v) if x != 0), None)
            if lead is None:
                return False
            row = self.rows.get(lead)
            if row is None:
                if v[lead] != 1:
                    v = scale(F, F.inv(v[lead]), v)
                self.rows[lead] = v
                return True
            coef = v[lead]
            v = vec_sub(F, v, scale(F, coef, row))

    @property
    def rank(self) -> int:
        return len(self.rows)


def span_dim(field: FieldSpec, vectors) -> int:
    acc = RankAccumulator(field)
    for v in vectors:
        acc.add(v)
    return acc.rank


def rref(field: FieldSpec, rows):
    """Reduced row echelon form.

    Returns (rows, pivots) where rows are fully reduced with leading 1s
    and pivots is the sorted list of pivot column indices.
    """
    F = field
    acc = RankAccumulator(F)
    for r in rows:
        acc.add(r)
    pivots = sorted(acc.rows)
    out = [acc.rows[p] for p in pivots]
    # back-substitute so pivot columns are zero elsewhere
    for i, p in enumerate(pivots):
        for j in range(len(out)):
            if j != i and out[j][p] != 0:
                out[j] = vec_sub(F, out[j], scale(F, out[j][p], out[i]))
    return out, pivots


def nullspace(field: FieldSpec, rows, k: int):
    """Basis of {v : <r, v> = 0 for all r in rows} inside GF(q)^k."""
    F = field
    red, pivots = rref(F, rows)
    free = [j for j in range(k) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * k
        v[f] = 1
        for row, p in zip(red, pivots):
            v[p] = F.neg(row[f])
        basis.append(tuple(v))
    return basis


def solve_linear(field: FieldSpec, rows, rhs):
    """One solution v of <rows[i], v> = rhs[i]; None if inconsistent."""
    F = field
    k = len(rows[0])
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    red, pivots = rref(F, aug)
    if k in pivots:
        return None
    v = [0] * k
    for row, p in zip(red, pivots):
        v[p] = row[k]
    return tuple(v)


class VectorMultiset:
    """Ordered multiset of nonzero vectors in GF(q)^k.

    Entries are kept in canonical sorted order (lexicographic by encoded
    coordinates) with multiplicities merged, so equal multisets compare
    equal and downstream reports are bit-reproducible.
    """

    __slots__ = ("field", "k", "entries", "_cols", "_mults")

    def __init__(self, field: FieldSpec, k: int, vectors, _allow_zero=False):
        counts = {}
        for item in vectors:
            if len(item) == 2 and isinstance(item[0], (tuple, list)):
                v, m = item
            else:
                v, m = item, 1
            v = tuple(int(x) for x in v)
            if len(v) != k:
                raise LengthMismatch(f"vector of length {len(v)} in ambient k={k}")
            if not any(v) and not _allow_zero:
                raise ZeroVector("multiset entries must be nonzero")
            if any(x < 0 or x >= field.q for x in v):
                raise ValueError(f"coordinate out of range for q={field.q}: {v}")
            counts[v] = counts.get(v, 0) + int(m)
        self.field = field
        self.k = k
        self.entries = [(v, counts[v]) for v in sorted(counts)]
        self._cols = None
        self._mults = None

    @property
    def size(self) -> int:
        """Cardinality counted with multiplicity."""
        return sum(m for _, m in self.entries)

    @property
    def distinct(self) -> int:
        return len(self.entries)

    def vectors(self):
        """Iterate entries expanded by multiplicity, canonical order."""
        for v, m in self.entries:
            for _ in range(m):
                yield v

    def support_vectors(self):
        """Iterate distinct vectors, canonical order."""
        for v, _ in self.entries:
            yield v

    def contains_zero(self) -> bool:
        return bool(self.entries) and not any(self.entries[0][0])

    def columns(self):
        """(distinct-vector int16 array (E, k), multiplicity int64 array (E,))."""
        if self._cols is None:
            self._cols = np.array([v for v, _ in self.entries], dtype=np.int16)
            self._mults = np.array([m for _, m in self.entries], dtype=np.int64)
        return self._cols, self._mults

    def same_ambient(self, other: "VectorMultiset"):
        if self.field != other.field or self.k != other.k:
            raise AmbientMismatch(
                f"ambients (q={self.field.q}, k={self.k}) and "
                f"(q={other.field.q}, k={other.k}) differ")

    def __eq__(self, other):
        return (isinstance(other, VectorMultiset)
                and self.field == other.field
                and self.k == other.k
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.k, tuple(self.entries)))

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"VectorMultiset(q={self.field.q}, k={self.k}, size={self.size})"


def project_multiset(D: VectorMultiset) -> VectorMultiset:
    """Projection: one leading-one representative per projective point."""
    reps = {proj_normalize(D.field, v) for v in D.support_vectors() if any(v)}
    return VectorMultiset(D.field, D.k, reps)


def is_projective(D: VectorMultiset) -> bool:
    return project_multiset(D).size == D.size


def projective_points(field: FieldSpec, k: int):
    """All leading-one representatives in GF(q)^k, canonical sorted order."""
    q = field.q
    pts = []
    for lead in range(k):
        prefix = (0,) * lead
        for rest in _all_tuples(q, k - lead - 1):
            pts.append(prefix + (1,) + rest)
    pts.sort()
    return pts


def _all_tuples(q, n):
    if n == 0:
        return [()]
    out = [()]
    for _ in range(n):
        out = [t + (c,) for t in out for c in range(q)]
    return out

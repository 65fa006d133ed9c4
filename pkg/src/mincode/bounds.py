"""Bound audits for minimal codes.

Everything here consumes measured quantities (n, dim, w_min, w_max,
fold) and compares with exact integer/rational arithmetic; bounds are
audited, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional

from .code import LinearCode, weight_distribution


def griesmer_lb(q: int, k: int, d: int) -> int:
    """sum_{i=0}^{k-1} ceil(d / q^i)."""
    return sum(ceil(Fraction(d, q ** i)) for i in range(k))


def minimal_code_bounds(q: int, k: int):
    """(distance_lb, length_lb) for a minimal [n, k] code over GF(q)."""
    distance_lb = (q - 1) * (k - 1) + 1
    length_lb = distance_lb + sum(
        ceil(Fraction(distance_lb, q ** i)) for i in range(1, k))
    return distance_lb, length_lb


@dataclass
class BoundAudit:
    griesmer_rhs: int
    griesmer_ok: bool
    distance_lb: int
    distance_ok: bool
    distance_tight: bool
    length_lb: int
    length_ok: bool
    wmax_ub: int
    wmax_ok: bool
    fold_lb: int
    fold: Optional[int]
    fold_ok: Optional[bool]
    dim_cap: Fraction
    dim_cap_ok: bool
    ab_ratio: Fraction
    ab_threshold: Fraction

    @property
    def all_ok(self) -> bool:
        flags = [self.griesmer_ok, self.distance_ok, self.length_ok,
                 self.wmax_ok, self.dim_cap_ok]
        if self.fold_ok is not None:
            flags.append(self.fold_ok)
        return all(flags)

    def to_json(self) -> dict:
        return {
            "griesmer": {"rhs": self.griesmer_rhs, "ok": self.griesmer_ok},
            "distance_lb": {"value": self.distance_lb, "ok": self.distance_ok,
                            "tight": self.distance_tight},
            "length_lb": {"value": self.length_lb, "ok": self.length_ok},
            "wmax_ub": {"value": self.wmax_ub, "ok": self.wmax_ok},
            "fold_lb": {"value": self.fold_lb, "fold": self.fold,
                        "ok": self.fold_ok},
            "dim_cap": {"value": str(self.dim_cap), "ok": self.dim_cap_ok},
            "ab_ratio": str(self.ab_ratio),
            "ab_threshold": str(self.ab_threshold),
        }


def audit(C: LinearCode, minimal: bool, fold: Optional[int] = None) -> BoundAudit:
    """Evaluate every bound against measured code parameters.

    The minimal-code bounds are theorems about minimal codes, so the
    flags are only meaningful when ``minimal`` is True; fold is the
    measured 1-fold of the projection (None skips that flag).
    """
    q, k, n = C.field.q, C.dim, C.n
    wd = weight_distribution(C)
    d, wmax = wd.w_min, wd.w_max
    distance_lb, length_lb = minimal_code_bounds(q, k)
    gr = griesmer_lb(q, k, d)
    if not minimal:
        # only the Griesmer bound applies to arbitrary codes
        distance_lb = length_lb = 0
    return BoundAudit(
        griesmer_rhs=gr,
        griesmer_ok=n >= gr,
        distance_lb=distance_lb,
        distance_ok=d >= distance_lb,
        distance_tight=d == distance_lb,
        length_lb=length_lb,
        length_ok=n >= length_lb,
        wmax_ub=n - k + 1,
        wmax_ok=(not minimal) or wmax <= n - k + 1,
        fold_lb=k - 1,
        fold=fold,
        fold_ok=None if fold is None else fold >= k - 1,
        dim_cap=Fraction(n, q) + 1,
        dim_cap_ok=(not minimal) or k <= Fraction(n, q) + 1,
        ab_ratio=Fraction(d, wmax),
        ab_threshold=Fraction(q - 1, q),
    )


def jamison_lb(k: int, q: int) -> int:
    """Minimum size of an affine blocking set in GF(q)^k."""
    return k * (q - 1) + 1

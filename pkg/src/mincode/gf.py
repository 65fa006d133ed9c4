"""Exact arithmetic in GF(p^e) with integer-encoded elements.

An element with polynomial coordinates (c_0, ..., c_{e-1}) over GF(p) is
encoded as the integer sum(c_i * p**i), a bijection onto {0, ..., q-1}.
0 encodes the additive identity and 1 the multiplicative identity.

Fields of order up to TABLE_LIMIT carry full addition/multiplication/
inverse tables; the enumeration kernels index straight into them.
Larger fields fall back to on-the-fly polynomial arithmetic.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .errors import DegreeMismatch, DivisionByZero, NotPrime, Reducible

TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# Polynomials over GF(p): tuples of coefficients, low degree first.
# ---------------------------------------------------------------------------

def _trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_mod(a, b, p):
    a = list(_trim(a))
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _trim(poly)
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if poly[0] == 0:  # divisible by x
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = tail + (1,)
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _least_irreducible(p, e):
    # Lexicographically least monic irreducible, coefficients compared
    # low-degree first.
    for tail in itertools.product(range(p), repeat=e):
        poly = tail + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible of degree {e} over GF({p})")


# ---------------------------------------------------------------------------
# FieldSpec
# ---------------------------------------------------------------------------

class FieldSpec:
    """GF(p^e) with a fixed reduction polynomial.

    Immutable after construction; instances (including their tables) are
    safe to share across threads.  Use :func:`field_make` instead of the
    constructor to get validation and caching.
    """

    __slots__ = (
        "p", "e", "q", "modulus",
        "_add", "_mul", "_neg", "_inv",
        "_add_np", "_mul_np",
    )

    def __init__(self, p: int, e: int, modulus: tuple):
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        self._add = self._mul = self._neg = self._inv = None
        self._add_np = self._mul_np = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- encoding ----------------------------------------------------------

    def coeffs(self, x: int) -> tuple:
        cs = []
        for _ in range(self.e):
            cs.append(x % self.p)
            x //= self.p
        return tuple(cs)

    def encode(self, cs) -> int:
        x = 0
        for c in reversed(tuple(cs)[: self.e]):
            x = x * self.p + (c % self.p)
        return x

    # -- tables ------------------------------------------------------------

    def _build_tables(self):
        p, q, e = self.p, self.q, self.e
        if e == 1:
            add = [[(x + y) % p for y in range(q)] for x in range(q)]
            mul = [[(x * y) % p for y in range(q)] for x in range(q)]
        else:
            coeffs = [self.coeffs(x) for x in range(q)]
            add = [
                [self.encode((a + b) % p for a, b in zip(cx, cy)) for cy in coeffs]
                for cx in coeffs
            ]
            mul = []
            for cx in coeffs:
                row = []
                for cy in coeffs:
                    prod = _poly_mod(_poly_mul(cx, cy, p), self.modulus, p)
                    row.append(self.encode(prod + (0,) * e))
                mul.append(row)
        self._add = add
        self._mul = mul
        self._neg = [add[x].index(0) for x in range(q)]
        inv = [0] * q
        for x in range(1, q):
            inv[x] = mul[x].index(1)
        self._inv = inv

    @property
    def add_table(self) -> np.ndarray:
        if self._add_np is None:
            if self._add is None:
                raise ValueError(f"no tables for q={self.q} > {TABLE_LIMIT}")
            self._add_np = np.array(self._add, dtype=np.int16)
        return self._add_np

    @property
    def mul_table(self) -> np.ndarray:
        if self._mul_np is None:
            if self._mul is None:
                raise ValueError(f"no tables for q={self.q} > {TABLE_LIMIT}")
            self._mul_np = np.array(self._mul, dtype=np.int16)
        return self._mul_np

    # -- arithmetic ---------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self._add is not None:
            return self._add[x][y]
        if self.e == 1:
            return (x + y) % self.p
        cx, cy = self.coeffs(x), self.coeffs(y)
        return self.encode((a + b) % self.p for a, b in zip(cx, cy))

    def neg(self, x: int) -> int:
        if self._neg is not None:
            return self._neg[x]
        if self.e == 1:
            return (-x) % self.p
        return self.encode((-c) % self.p for c in self.coeffs(x))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self._mul is not None:
            return self._mul[x][y]
        if self.e == 1:
            return (x * y) % self.p
        prod = _poly_mod(_poly_mul(self.coeffs(x), self.coeffs(y), self.p),
                         self.modulus, self.p)
        return self.encode(prod + (0,) * self.e)

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        if self._inv is not None:
            return self._inv[x]
        return self.pow(x, self.q - 2)

    def pow(self, x: int, m: int) -> int:
        if m < 0:
            x, m = self.inv(x), -m
        out = 1
        base = x
        while m:
            if m & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            m >>= 1
        return out

    def elements(self) -> list:
        return list(range(self.q))

    # -- misc ----------------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e}, modulus={list(self.modulus)})"


@lru_cache(maxsize=None)
def _field_cached(p, e, modulus):
    return FieldSpec(p, e, modulus)


def field_make(p: int, e: int = 1, modulus=None) -> FieldSpec:
    """Build GF(p^e).

    If no modulus is given, the lexicographically least monic irreducible
    of degree e is used (coefficients compared low-degree first).  Any
    irreducible yields an isomorphic field.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {e}")
    if modulus is None:
        modulus = (0, 1) if e == 1 else _least_irreducible(p, e)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise DegreeMismatch(
                f"modulus must be monic of degree {e}, got {list(modulus)}")
        if not _is_irreducible(modulus, p):
            raise Reducible(f"modulus {list(modulus)} is reducible over GF({p})")
    return _field_cached(p, e, modulus)


def field_from_order(q: int) -> FieldSpec:
    """GF(q) for a prime power q, with the default modulus."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise NotPrime(f"{q} is not a prime power")
            return field_make(p, e)
    raise NotPrime(f"{q} is not a prime power")


def field_from_json(d: dict) -> FieldSpec:
    return field_make(int(d["p"]), int(d["e"]), d.get("modulus"))

"""Field arithmetic: axioms, encoding, tables, and validation errors."""

import itertools

import pytest

from mincode.errors import DegreeMismatch, DivisionByZero, NotPrime, Reducible
from mincode.gf import (FieldSpec, TABLE_LIMIT, field_from_json,
                        field_from_order, field_make)

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9]


def test_field_axioms_exhaustive():
    # associativity, commutativity, distributivity over every triple
    for q in SMALL_ORDERS:
        F = field_from_order(q)
        for x, y, z in itertools.product(F.elements(), repeat=3):
            assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
            assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
            assert F.add(x, y) == F.add(y, x)
            assert F.mul(x, y) == F.mul(y, x)
            assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))


def test_identities_inverses_exhaustive():
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]:
        F = field_from_order(q)
        for x in F.elements():
            assert F.add(x, 0) == x
            assert F.mul(x, 1) == x
            assert F.mul(x, 0) == 0
            assert F.add(F.neg(x), x) == 0
            if x != 0:
                assert F.mul(F.inv(x), x) == 1


def test_frobenius_exhaustive():
    # (x + y)^p = x^p + y^p in GF(p^e)
    for q in [4, 8, 9, 16]:
        F = field_from_order(q)
        for x, y in itertools.product(F.elements(), repeat=2):
            assert F.pow(F.add(x, y), F.p) == F.add(F.pow(x, F.p), F.pow(y, F.p))


def test_encoding_roundtrip():
    for q in [9, 16, 25]:
        F = field_from_order(q)
        for x in F.elements():
            assert F.encode(F.coeffs(x)) == x
            assert len(F.coeffs(x)) == F.e


def test_gf4_examples():
    # GF(4) = GF(2)[x]/(1 + x + x^2); 2 encodes x, 3 encodes x + 1
    F = field_from_order(4)
    assert F.modulus == (1, 1, 1)
    assert F.mul(2, 3) == 1  # x(x+1) = x^2 + x = 1
    assert F.mul(2, 2) == 3  # x^2 = x + 1
    assert F.add(2, 3) == 1
    assert F.inv(2) == 3


def test_gf9_default_modulus_irreducible():
    F = field_from_order(9)
    assert F.p == 3 and F.e == 2
    # the modulus is monic of degree 2 with no root in GF(3)
    c0, c1, c2 = F.modulus
    assert c2 == 1
    for r in range(3):
        assert (c0 + c1 * r + c2 * r * r) % 3 != 0


def test_large_field_no_tables():
    # above TABLE_LIMIT arithmetic falls back to polynomial computation
    F = field_make(2, 9)  # q = 512
    assert F.q > TABLE_LIMIT
    x, y = 5, 311
    assert F.mul(x, F.inv(x)) == 1
    assert F.add(x, y) == F.add(y, x)
    assert F.mul(F.mul(x, y), x) == F.mul(x, F.mul(y, x))
    with pytest.raises(ValueError):
        F.mul_table


def test_table_matches_scalar_path():
    # tables agree with the generic polynomial arithmetic
    for q in [8, 9]:
        F = field_from_order(q)
        G = FieldSpec(F.p, F.e, F.modulus)
        G._add = G._mul = G._neg = G._inv = None  # force the fallback path
        for x, y in itertools.product(range(q), repeat=2):
            assert F.add(x, y) == G.add(x, y)
            assert F.mul(x, y) == G.mul(x, y)


def test_explicit_modulus():
    # any irreducible modulus is accepted and changes the multiplication
    F = field_make(2, 3, modulus=(1, 1, 0, 1))
    G = field_make(2, 3, modulus=(1, 0, 1, 1))
    assert F != G
    for x in range(1, 8):
        assert F.mul(F.inv(x), x) == 1
        assert G.mul(G.inv(x), x) == 1


def test_validation_errors():
    with pytest.raises(NotPrime):
        field_make(6)
    with pytest.raises(NotPrime):
        field_from_order(12)
    with pytest.raises(NotPrime):
        field_from_order(1)
    with pytest.raises(DegreeMismatch):
        field_make(2, 0)
    with pytest.raises(DegreeMismatch):
        field_make(2, 3, modulus=(1, 1, 1))  # wrong degree
    with pytest.raises(Reducible):
        field_make(2, 2, modulus=(0, 0, 1))  # x^2
    with pytest.raises(DivisionByZero):
        field_from_order(5).inv(0)


def test_json_roundtrip_and_caching():
    F = field_from_order(9)
    assert field_from_json(F.to_json()) is F  # cached: identical instance
    assert field_make(3, 2) is F

"""Field construction, arithmetic axioms, roots of unity and embeddings."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genfermat import ff
from genfermat.errors import (
    BadDegree,
    DivisionByZero,
    FieldMismatch,
    NoSuchRoot,
    NotCoprime,
    NotPrime,
)

from conftest import rng_for


def test_make_field_examples():
    f7 = ff.make_field(7, 1)
    assert (f7.p, f7.m, f7.modulus) == (7, 1, (0, 1))
    f4 = ff.make_field(2, 2)
    assert f4.modulus == (1, 1, 1)  # the unique monic irreducible quadratic
    with pytest.raises(NotPrime):
        ff.make_field(4, 1)
    with pytest.raises(BadDegree):
        ff.make_field(7, 0)


def test_modulus_is_deterministic_smallest():
    # known smallest irreducibles under leading-first comparison
    assert ff.make_field(2, 3).modulus == (1, 1, 0, 1)      # t^3 + t + 1
    assert ff.make_field(3, 2).modulus == (1, 0, 1)          # t^2 + 1
    assert ff.make_field(2, 4).modulus == (1, 1, 0, 0, 1)    # t^4 + t + 1
    assert ff.make_field(5, 2).modulus == (2, 0, 1)          # t^2 + 2


def test_arithmetic_examples():
    f7 = ff.make_field(7)
    assert f7.element(3).inverse() == f7.element(5)
    f4 = ff.make_field(2, 2)
    t = f4.element([0, 1])
    assert t * (t + f4.one()) == f4.one()
    assert f7.element(3) ** 0 == f7.one()
    with pytest.raises(DivisionByZero):
        f7.zero().inverse()
    with pytest.raises(FieldMismatch):
        f7.element(1) + f4.one()


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 2), (5, 2), (7, 2), (3, 4), (2, 8), (31, 1)])
def test_unit_group_order_by_exhaustion(p, m):
    f = ff.make_field(p, m)
    assert f.q <= 1024
    for x in f.elements():
        if x.code:
            assert x ** (f.q - 1) == f.one()


def test_field_with_kth_roots_examples():
    assert ff.field_with_kth_roots(2, 3) == ff.make_field(2, 2)
    assert ff.field_with_kth_roots(7, 3) == ff.make_field(7, 1)
    assert ff.field_with_kth_roots(5, 8) == ff.make_field(5, 2)  # ord(5 mod 8) = 2
    with pytest.raises(NotCoprime):
        ff.field_with_kth_roots(3, 3)


def test_primitive_kth_root():
    f7 = ff.make_field(7)
    w = ff.primitive_kth_root(f7, 3)
    assert w == f7.element(2)  # generator 3 raised to (7-1)/3
    assert w ** 3 == f7.one() and w != f7.one()
    assert ff.primitive_kth_root(f7, 1) == f7.one()
    with pytest.raises(NoSuchRoot):
        ff.primitive_kth_root(f7, 4)


@pytest.mark.parametrize("p,m,k", [(7, 1, 2), (7, 1, 3), (7, 1, 6), (2, 2, 3),
                                   (3, 2, 8), (5, 2, 24), (7, 2, 16)])
def test_primitive_root_has_exact_order(p, m, k):
    f = ff.make_field(p, m)
    w = ff.primitive_kth_root(f, k)
    acc = f.one()
    for j in range(1, k):
        acc = acc * w
        assert acc != f.one(), f"{k}-th root has order {j}"
    assert acc * w == f.one()


def test_kth_roots_examples():
    f7 = ff.make_field(7)
    assert ff.kth_roots_of(f7.one(), 3) == {f7.element(c) for c in (1, 2, 4)}
    assert ff.kth_roots_of(f7.element(2), 2) == {f7.element(3), f7.element(4)}
    assert ff.kth_roots_of(f7.zero(), 5) == {f7.zero()}
    assert ff.kth_roots_of(f7.element(3), 2) == set()  # 3 is not a square mod 7


@pytest.mark.parametrize("p,m", [(7, 1), (3, 2), (2, 4), (13, 1)])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 6, 12])
def test_root_of_unity_counts(p, m, k):
    from math import gcd

    f = ff.make_field(p, m)
    assert len(ff.kth_roots_of(f.one(), k)) == gcd(k, f.q - 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 48), st.integers(0, 48), st.integers(0, 48))
def test_field_axioms_gf49(a, b, c):
    f = ff.make_field(7, 2)
    x, y, z = f.from_code(a), f.from_code(b), f.from_code(c)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x.code:
        assert x * x.inverse() == f.one()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(-20, 20))
def test_pow_matches_repeated_multiplication(code, e):
    f = ff.make_field(2, 3)
    x = f.from_code(code)
    if x.code == 0:
        if e < 0:
            with pytest.raises(DivisionByZero):
                x ** e
        else:
            assert (x ** e) == (f.one() if e == 0 else f.zero())
        return
    acc = f.one()
    for _ in range(abs(e)):
        acc = acc * x
    if e < 0:
        acc = acc.inverse()
    assert x ** e == acc


def test_embedding_is_a_ring_homomorphism():
    f7 = ff.make_field(7)
    f49 = ff.make_field(7, 2)
    f2401 = ff.make_field(7, 4)
    for a, b in itertools.product(range(7), repeat=2):
        x, y = f7.element(a), f7.element(b)
        assert ff.embed(x + y, f49) == ff.embed(x, f49) + ff.embed(y, f49)
        assert ff.embed(x * y, f49) == ff.embed(x, f49) * ff.embed(y, f49)
    rng = rng_for("embed-tower")
    for _ in range(25):
        x, y = f49.random_element(rng), f49.random_element(rng)
        assert ff.embed(x * y, f2401) == ff.embed(x, f2401) * ff.embed(y, f2401)
        assert ff.embed(x + y, f2401) == ff.embed(x, f2401) + ff.embed(y, f2401)
    with pytest.raises(FieldMismatch):
        ff.embed(f49.element([1, 1]), ff.make_field(7, 3))


def test_serialization_round_trip():
    f = ff.make_field(3, 2)
    doc = f.to_dict()
    assert doc == {"p": 3, "m": 2, "modulus": [1, 0, 1]}
    assert ff.FieldSpec.from_dict(doc) == f
    x = f.element([2, 1])
    assert f.element(x.to_coeffs()) == x


def test_subfield_degree():
    f64 = ff.make_field(2, 6)
    assert ff.subfield_degree(f64.one()) == 1
    degrees = {ff.subfield_degree(x) for x in f64.elements() if x.code}
    assert degrees == {1, 2, 3, 6}

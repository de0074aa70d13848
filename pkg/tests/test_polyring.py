"""Sparse polynomial ring: exactness, char-2 laws, substitution, proportionality."""

import random

import pytest

from frobp3.gf2k import BinaryField
from frobp3.polyring import SparsePoly, proportional

GF2 = BinaryField(1)
GF4 = BinaryField(2)


def x(name, field=GF2):
    return SparsePoly.var(name, field)


def random_poly(field, rng, nterms=4, nvars=3, maxexp=3):
    p = SparsePoly.zero(field)
    names = ["x00", "x01", "x10"][:nvars]
    for _ in range(nterms):
        term = SparsePoly.const(field.random_element(rng))
        for name in names:
            e = rng.randrange(0, maxexp)
            if e:
                term = term * (SparsePoly.var(name, field) ** e)
        p = p + term
    return p


def test_char2_cancellation():
    p = x("x00") + x("x01")
    assert (p + p).is_zero()


def test_freshman_dream():
    p = x("x00") + x("x01")
    sq = p * p
    assert sq == x("x00") ** 2 + x("x01") ** 2
    assert sq == p.square()


def test_fourth_power_of_sum():
    h = x("x00") + x("x01") + x("x10") + x("x11")
    assert h ** 4 == (x("x00") ** 4 + x("x01") ** 4
                      + x("x10") ** 4 + x("x11") ** 4)


def test_substitute_identity_and_zero():
    p = x("x00")
    assert p.substitute({"x00": x("x00")}) == p
    q = x("x00") * x("x01")
    assert q.substitute({"x00": GF2.zero}).is_zero()


def test_substitute_numeric_point():
    # x01*x00 + x11*x10 at (0, w, w^2, 0)
    p = x("x01", GF4) * x("x00", GF4) + x("x11", GF4) * x("x10", GF4)
    val = p.evaluate({"x00": GF4.zero, "x01": GF4.element(2),
                      "x10": GF4.element(3), "x11": GF4.zero})
    assert val.bits == 0
    # and x11*x00 + x10*x01 at the same point is w*w^2 = 1
    q = x("x11", GF4) * x("x00", GF4) + x("x10", GF4) * x("x01", GF4)
    val = q.evaluate({"x00": GF4.zero, "x01": GF4.element(2),
                      "x10": GF4.element(3), "x11": GF4.zero})
    assert val == GF4.one


def test_proportional():
    rng = random.Random(11)
    p = random_poly(GF4, rng)
    while p.is_zero():
        p = random_poly(GF4, rng)
    assert proportional(p, p) == GF4.one
    assert proportional(SparsePoly.zero(GF4), p) is None
    for _ in range(10):
        c = GF4.random_nonzero(rng)
        assert proportional(p * c, p) == c
    # different support is never proportional
    assert proportional(p + SparsePoly.var("s", GF4) ** 9, p) is None


def test_ring_axioms_random():
    rng = random.Random(12)
    for field in (GF2, GF4):
        for _ in range(15):
            a = random_poly(field, rng)
            b = random_poly(field, rng)
            c = random_poly(field, rng)
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a


def test_substitution_commutes_with_squaring():
    rng = random.Random(13)
    sigma = {"x00": random_poly(GF4, rng), "x01": random_poly(GF4, rng)}
    for _ in range(10):
        p = random_poly(GF4, rng)
        assert p.square().substitute(sigma) == p.substitute(sigma).square()


def test_evaluation_homomorphism():
    rng = random.Random(14)
    names = ("x00", "x01", "x10")
    for _ in range(15):
        a = random_poly(GF4, rng)
        b = random_poly(GF4, rng)
        pt = {n: GF4.random_element(rng) for n in names}
        assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)
        assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)


def test_field_mismatch_raises():
    with pytest.raises(ValueError):
        x("x00", GF2) + x("x00", GF4)


def test_to_text_deterministic():
    p = x("x10") * x("x00") + x("x11") * x("x01") + SparsePoly.const(GF2.one)
    assert p.to_text() == "x00*x10 + x01*x11 + 1"
    assert SparsePoly.zero(GF2).to_text() == "0"


def test_scalar_multiplication():
    w = GF4.element(2)
    p = x("x00", GF4) + x("x01", GF4)
    q = p * w
    assert q.terms[((0, 1),)] == w

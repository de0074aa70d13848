"""Field layer: GF(2^n) arithmetic, towers, and the char-2 quadratic solver."""

import random

import pytest

from frobp3.gf2k import (BinaryField, artin_schreier_roots, default_modulus,
                         embed, in_parent, is_irreducible, quadratic_extension,
                         to_parent, trace_one_element)

GF2 = BinaryField(1)
GF4 = BinaryField(2)
W = GF4.element(2)
W2 = GF4.element(3)


def naive_irreducible(f: int) -> bool:
    # trial division by every polynomial of degree 1..n/2
    n = f.bit_length() - 1
    for d in range(1, n // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            r = f
            while r.bit_length() >= g.bit_length():
                r ^= g << (r.bit_length() - g.bit_length())
            if r == 0:
                return False
    return n >= 1


def test_default_moduli_are_first_irreducibles():
    assert default_modulus(1) == 0b10
    assert default_modulus(2) == 0b111
    assert default_modulus(3) == 0b1011
    assert default_modulus(4) == 0b10011
    assert default_modulus(8) == 0x11B
    for n in range(1, 11):
        m = default_modulus(n)
        assert naive_irreducible(m)
        for smaller in range(1 << n, m):
            assert not naive_irreducible(smaller)


def test_rabin_matches_naive_division():
    for f in range(2, 1 << 10):
        assert is_irreducible(f) == naive_irreducible(f), hex(f)


def test_char2_addition():
    a = GF4.element(3)
    assert (a + a).bits == 0
    assert (GF2.one + GF2.zero) == GF2.one
    assert W + W2 == GF4.one


def test_gf4_multiplication_and_inverse():
    assert W * W2 == GF4.one
    assert W * W == W2
    assert GF2.one.inv() == GF2.one
    assert W.inv() == W2
    with pytest.raises(ZeroDivisionError):
        GF4.zero.inv()


def test_pow_frobenius_fixed_field():
    rng = random.Random(1)
    for f in (GF2, GF4, BinaryField(5), BinaryField(8)):
        for _ in range(20):
            a = f.random_element(rng)
            assert a ** f.order == a


def test_sqrt():
    assert GF4.zero.sqrt() == GF4.zero
    assert GF4.one.sqrt() == GF4.one
    rng = random.Random(2)
    for f in (GF2, GF4, BinaryField(7), BinaryField(16)):
        for _ in range(30):
            a = f.random_element(rng)
            assert a.square().sqrt() == a
            assert a.sqrt().square() == a


def test_trace_values_and_linearity():
    assert GF2.zero.trace().bits == 0
    assert GF2.one.trace().bits == 1
    assert W.trace().bits == 1          # w + w^2 = 1
    rng = random.Random(3)
    for f in (GF4, BinaryField(5), BinaryField(12)):
        for _ in range(30):
            a, b = f.random_element(rng), f.random_element(rng)
            assert (a + b).trace() == a.trace() + b.trace()
            assert (a.square() + a).trace().bits == 0
            assert a.trace().bits in (0, 1)


def test_frobenius_is_automorphism():
    rng = random.Random(4)
    for f in (GF4, BinaryField(9), quadratic_extension(GF4)):
        for _ in range(30):
            a, b = f.random_element(rng), f.random_element(rng)
            assert (a + b).square() == a.square() + b.square()
            assert (a * b).square() == a.square() * b.square()


def test_artin_schreier_worked_cases():
    roots = artin_schreier_roots(GF2.one, GF2.zero)
    assert [r.bits for r in roots] == [0, 1]
    assert artin_schreier_roots(GF2.one, GF2.one) == []
    roots = artin_schreier_roots(GF4.one, GF4.one)
    assert [r.bits for r in roots] == [2, 3]
    rng = random.Random(5)
    for f in (GF4, BinaryField(6)):
        a = f.random_element(rng)
        assert artin_schreier_roots(f.zero, a.square()) == [a]


def test_artin_schreier_exhaustive_small_fields():
    for n in range(1, 5):
        f = BinaryField(n)
        ext = quadratic_extension(f)
        for c in f.elements():
            for d in f.elements():
                roots = artin_schreier_roots(c, d)
                assert len(roots) in (0, 1, 2)
                for r in roots:
                    assert (r.square() + c * r + d).bits == 0
                # brute-force root count agrees
                brute = [t for t in f.elements()
                         if (t.square() + c * t + d).bits == 0]
                assert roots == brute
                if c.bits and not roots:
                    lifted = artin_schreier_roots(embed(ext, c), embed(ext, d))
                    assert len(lifted) == 2
                    for r in lifted:
                        assert (r.square() + embed(ext, c) * r + embed(ext, d)).bits == 0


def test_solvability_criterion_is_trace():
    for n in (2, 3, 4):
        f = BinaryField(n)
        for e in f.elements():
            solvable = bool(artin_schreier_roots(f.one, e))
            assert solvable == (e.trace().bits == 0)


def test_quadratic_extension_basics():
    ext = quadratic_extension(GF4)
    assert ext.degree == 4
    assert ext.tower_parent is GF4
    w = GF4.element(ext.tower_w)
    assert w.trace().bits == 1
    assert embed(ext, GF4.zero) == ext.zero
    rng = random.Random(6)
    for _ in range(50):
        a, b = GF4.random_element(rng), GF4.random_element(rng)
        assert embed(ext, a) * embed(ext, b) == embed(ext, a * b)
        assert embed(ext, a) + embed(ext, b) == embed(ext, a + b)
    # the defining relation: u^2 + u = w, so u and u+1 solve t^2 + t + w
    u = ext.element(1 << GF4.degree)
    roots = artin_schreier_roots(ext.one, embed(ext, w))
    assert set(roots) == {u, u + ext.one}
    # lift-back test
    assert in_parent(embed(ext, a))
    assert not in_parent(u)
    assert to_parent(embed(ext, a)) == a
    with pytest.raises(ValueError):
        to_parent(u)


def test_towers_stack():
    f = BinaryField(3)
    e1 = quadratic_extension(f)
    e2 = quadratic_extension(e1)
    assert (f.degree, e1.degree, e2.degree) == (3, 6, 12)
    rng = random.Random(7)
    for _ in range(20):
        a = e2.random_element(rng)
        assert a.square().sqrt() == a
        if a.bits:
            assert a * a.inv() == e2.one
    # trace via the tower shortcut agrees with the power-sum definition
    for _ in range(20):
        a = e2.random_element(rng)
        acc = e2.zero
        x = a
        for _ in range(e2.degree):
            acc = acc + x
            x = x.square()
        assert acc == a.trace()


def test_trace_one_element_deterministic():
    w = trace_one_element(GF4)
    assert w.trace().bits == 1
    assert w == trace_one_element(GF4)


def test_field_value_semantics():
    f1 = BinaryField(4)
    f2 = BinaryField(4)
    assert f1 == f2 and hash(f1) == hash(f2)
    assert f1.element(5) == f2.element(5)
    other = BinaryField(4, 0b11001)      # t^4 + t^3 + 1, also irreducible
    assert f1 != other
    with pytest.raises(ValueError):
        f1.element(5) + other.element(5)


def test_construction_validation():
    with pytest.raises(ValueError):
        BinaryField(4, 0b10101)          # (t^2+t+1)^2, reducible
    with pytest.raises(ValueError):
        BinaryField(4, 0b1011)           # degree mismatch
    with pytest.raises(ValueError):
        BinaryField(0)
    with pytest.raises(ValueError):
        GF4.element(4)


def test_exhaustive_field_axioms_small():
    for n in range(1, 5):
        f = BinaryField(n)
        one = f.one
        for a in f.elements():
            assert a.square().sqrt() == a
            assert a ** f.order == a
            if a.bits:
                assert a * a.inv() == one


def test_hex_roundtrip():
    f = BinaryField(16)
    a = f.element(0xbeef)
    assert f.from_hex(a.hex()) == a

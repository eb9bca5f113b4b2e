import math
import random
from fractions import Fraction

import pytest

from pseudoreal import CycloNum, conj, field_arith, is_unimodular, rebase, root_of_unity
from pseudoreal.cyclotomic import cyclotomic_polynomial, euler_phi
from pseudoreal.errors import FieldMismatchError, NotASubfieldError

from conftest import gauss


def test_difference_of_squares_in_gaussian_field():
    i = CycloNum.i()
    one = CycloNum.one()
    assert (one + i) * (one - i) == CycloNum.from_rational(2)


def test_sixth_roots_sum_to_one():
    # 2 cos(pi/3) = 1
    v = root_of_unity(6, 1) + root_of_unity(6, 5)
    assert v == CycloNum.one()
    assert abs(v.to_complex() - 1.0) < 1e-14


def test_root_of_unity_inverse():
    assert CycloNum.one() / root_of_unity(8, 1) == root_of_unity(8, 7)


def test_conjugation_examples():
    i = CycloNum.i()
    assert conj(i) == -i
    assert conj(root_of_unity(6, 1)) == root_of_unity(6, 5)
    q = CycloNum.from_rational(Fraction(2, 3))
    assert conj(q) == q


def test_half_turn_and_golden_embedding():
    assert root_of_unity(12, 6) == CycloNum.from_rational(-1)
    v = root_of_unity(5, 1) + root_of_unity(5, 4)
    assert abs(v.to_complex() - (math.sqrt(5) - 1) / 2) < 1e-12


def test_rebase_examples():
    i = CycloNum.i()
    assert rebase(i, 12) == root_of_unity(12, 3)
    half = CycloNum.from_rational(Fraction(1, 2))
    for m in (1, 2, 6, 8, 20):
        assert rebase(half, m) == half
    assert rebase(root_of_unity(6, 1), 12) == root_of_unity(12, 2)
    with pytest.raises(NotASubfieldError):
        rebase(root_of_unity(8, 1), 12)


def test_unimodular_examples():
    i = CycloNum.i()
    assert is_unimodular(i)
    assert not is_unimodular(CycloNum.one() + i)
    assert is_unimodular(root_of_unity(12, 5))


def test_field_arith_strict_mode():
    i = CycloNum.i()
    w6 = root_of_unity(6, 1)
    assert field_arith(i, i, "mul") == CycloNum.from_rational(-1)
    with pytest.raises(FieldMismatchError):
        field_arith(i, w6, "add")
    # after rebasing both into the lcm field the operation goes through
    assert field_arith(i.rebase(12), w6.rebase(12), "mul") == root_of_unity(12, 5)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        CycloNum.one() / CycloNum.zero()


def test_field_axioms_on_random_samples():
    rng = random.Random(1001)
    for m in (1, 2, 3, 4, 8, 12, 20):
        deg = euler_phi(m)
        for _ in range(25):
            a = CycloNum(m, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(deg)])
            b = CycloNum(m, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(deg)])
            c = CycloNum(m, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(deg)])
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero():
                assert a * a.inv() == CycloNum.one(m)


def test_conj_is_involutive_field_automorphism():
    rng = random.Random(77)
    for _ in range(50):
        a = gauss(rng).rebase(12)
        b = gauss(rng).rebase(12) * root_of_unity(12, rng.randrange(12))
        assert conj(conj(a)) == a
        assert conj(a * b) == conj(a) * conj(b)
        assert conj(a + b) == conj(a) + conj(b)


def test_roots_of_unity_power_and_modulus():
    for m in (1, 2, 3, 4, 5, 6, 8, 9, 12, 20):
        for k in range(m):
            w = root_of_unity(m, k)
            assert (w ** m).is_one()
            assert is_unimodular(w)


def test_float_embedding_is_ring_homomorphism():
    rng = random.Random(13)
    for m in (4, 8, 12):
        deg = euler_phi(m)
        for _ in range(30):
            a = CycloNum(m, [Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 100)) for _ in range(deg)])
            b = CycloNum(m, [Fraction(rng.randint(-100, 100)) for _ in range(deg)])
            scale = max(1.0, abs(a.to_complex()) * abs(b.to_complex()))
            assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) <= 1e-12 * scale
            assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) <= 1e-12 * scale


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # prime p: 1 + x + ... + x^(p-1)
    assert cyclotomic_polynomial(7) == (1,) * 7


def test_expression_text_round_trip():
    from pseudoreal.cli import parse_constant

    rng = random.Random(5)
    for _ in range(20):
        v = gauss(rng) * root_of_unity(12, rng.randrange(12))
        assert parse_constant(v.to_expr()) == v

import random
from fractions import Fraction

import pytest

from ietsaf import (
    AlgNum,
    InputError,
    NumberField,
    Poly,
    ReducibleModulusError,
    eval_at,
)

from helpers import random_cubic_field


AY3 = Poly([-1, 1, 1, 1])        # x^3 + x^2 + x - 1, root ~ 0.5437
TRIB = Poly([-1, -1, -1, 1])     # x^3 - x^2 - x - 1, root ~ 1.8393
QUAD = Poly([1, -3, 1])          # x^2 - 3x + 1, root ~ 2.618


def test_field_new_examples():
    k3 = NumberField(AY3, 0, 1)
    assert k3.degree == 3
    assert k3.certified_prime == 3
    quad = NumberField(QUAD, 2, 3)
    assert quad.degree == 2
    with pytest.raises(InputError):
        NumberField(Poly([1, -2, 1]), 0, 2)       # (x-1)^2 not squarefree
    with pytest.raises(InputError):
        NumberField(Poly([-2, 0, 1]), -10, 10)    # two roots in the interval
    with pytest.raises(InputError):
        NumberField(Poly([-2, 0, 1]), 2, 3)       # no root in the interval


def test_field_rejects_non_monic_and_rational():
    with pytest.raises(InputError):
        NumberField(Poly([1, 2]), -10, 10)
    with pytest.raises(InputError):
        NumberField(Poly([Fraction(1, 2), 1]), -10, 10)


def test_alpha_relation_and_inverse():
    k3 = NumberField(AY3, 0, 1)
    a = k3.gen()
    assert a + a ** 2 + a ** 3 == k3.one()
    assert (a * a.inverse()) == k3.one()
    with pytest.raises(ZeroDivisionError):
        k3.zero().inverse()


def test_quadratic_trace():
    field = NumberField(QUAD, 2, 3)
    lam = field.gen()
    assert lam + 1 / lam == field.from_rational(3)


def test_sign_examples():
    k3 = NumberField(AY3, 0, 1)
    a = k3.gen()
    assert k3.zero().sign() == 0
    assert (a - Fraction(1, 2)).sign() == 1
    k4 = NumberField(Poly([-1, 1, 1, 1, 1]), 0, 1)
    b = k4.gen()
    assert (b - 1).sign() == -1
    assert (b - Fraction(51879, 100000)).sign() < 0 or \
           (b - Fraction(51878, 100000)).sign() > 0


def test_sign_agrees_with_float_on_random_elements():
    k3 = NumberField(AY3, 0, 1)
    root = float(k3.gen())
    rng = random.Random(17)
    for _ in range(1000):
        coords = [Fraction(rng.randint(-20, 20), rng.randint(1, 9))
                  for _ in range(3)]
        value = k3.element(coords)
        approx = float(coords[0]) + float(coords[1]) * root + \
            float(coords[2]) * root * root
        if abs(approx) > 1e-6:
            assert value.sign() == (1 if approx > 0 else -1)


def test_comparisons_and_rational_coercion():
    k3 = NumberField(AY3, 0, 1)
    a = k3.gen()
    assert Fraction(1, 2) < a < Fraction(6, 11)
    assert a != 0
    assert (a - a).is_zero()
    assert k3.from_rational(Fraction(2, 3)).to_rational() == Fraction(2, 3)


def test_ring_axioms_random_triples():
    rng = random.Random(23)
    field = NumberField(AY3, 0, 1)
    for _ in range(1000):
        a, b, c = (
            field.element([Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                           for _ in range(3)])
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a


def test_min_poly_examples():
    k3 = NumberField(TRIB, 1, 2)
    one = k3.one()
    assert one.min_poly() == Poly([-1, 1])
    quad = NumberField(QUAD, 2, 3)
    beta = quad.gen() + quad.gen().inverse()
    assert beta.min_poly() == Poly([-3, 1])
    lam = k3.gen()
    gamma = lam + lam.inverse()
    mp = gamma.min_poly()
    assert mp.degree == 3          # cubic field has no proper subfield but Q
    assert mp.is_monic
    assert eval_at(mp, gamma).is_zero()


def test_min_poly_degree_divides_field_degree():
    rng = random.Random(31)
    for _ in range(15):
        field = random_cubic_field(rng)
        coords = [Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                  for _ in range(3)]
        value = field.element(coords)
        mp = value.min_poly()
        assert field.degree % mp.degree == 0
        assert eval_at(mp, value).is_zero()


def test_reducible_modulus_detected_on_inversion():
    # (x^2+1)(x+2) is squarefree with a single real root -2... use interval around it
    modulus = Poly([1, 0, 1]) * Poly([2, 1])
    field = NumberField(modulus, -3, 0)
    assert field.certified_prime is None
    # x^2 + 1 is a zero divisor: inversion must name a factor
    elem = field.element([1, 0, 1])
    with pytest.raises(ReducibleModulusError) as info:
        elem.inverse()
    assert info.value.factor.degree >= 1


def test_field_equality_same_root():
    f1 = NumberField(AY3, 0, 1)
    f2 = NumberField(AY3, Fraction(1, 2), Fraction(3, 5))
    assert f1 == f2
    g1 = NumberField(Poly([-2, 0, 1]), 0, 2)
    g2 = NumberField(Poly([-2, 0, 1]), -2, 0)
    assert g1 != g2


def test_degree_one_field():
    field = NumberField(Poly([-2, 1]), 0, 3)   # Q with distinguished root 2
    two = field.gen()
    assert two.to_rational() == 2
    assert (two + 1 / two).to_rational() == Fraction(5, 2)
    assert (two - 5).sign() == -1


def test_approx_accuracy():
    k3 = NumberField(AY3, 0, 1)
    a = k3.gen()
    mid = a.approx(Fraction(1, 10 ** 30))
    # alpha satisfies its polynomial to within the tolerance
    residual = AY3(mid)
    assert abs(residual) < Fraction(1, 10 ** 28)


def test_pow():
    k3 = NumberField(AY3, 0, 1)
    a = k3.gen()
    assert a ** 0 == k3.one()
    assert a ** 3 == a * a * a
    assert a ** -2 == (a * a).inverse()

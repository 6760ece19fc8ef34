import random
from fractions import Fraction

import pytest

from ietsaf import (
    DomainError,
    IET,
    InputError,
    NumberField,
    Poly,
    WedgeClass,
    cyclic_discontinuities,
    rotation_conjugacy,
)

from helpers import (
    float_pieces,
    random_cubic_field,
    random_iet,
    random_pair_involution,
    random_positive,
    simulate,
)

AY3 = Poly([-1, 1, 1, 1])


@pytest.fixture(scope="module")
def k3():
    return NumberField(AY3, 0, 1)


def test_identity_and_rotation_translations(k3):
    ident = IET.identity(k3, 1)
    assert ident.translations() == (k3.zero(),)
    theta = k3.gen()
    rot = IET.rotation(k3, 1, theta)
    assert rot.translations() == (theta, theta - 1)


def test_constructor_errors(k3):
    a = k3.gen()
    with pytest.raises(InputError, match="bijection"):
        IET(k3, 1, [a, 1 - a], [0, 0])
    with pytest.raises(InputError, match="nonpositive"):
        IET(k3, 1, [a - 1, 2 - a], [1, 0])
    with pytest.raises(InputError, match="sum"):
        IET(k3, 2, [a, 1 - a], [1, 0])


def test_eval(k3):
    theta = k3.gen()
    rot = IET.rotation(k3, 1, theta)
    assert rot(k3.zero()) == theta
    assert IET.identity(k3, 1)(Fraction(1, 3)) == k3.from_rational(Fraction(1, 3))
    with pytest.raises(DomainError):
        rot(k3.from_rational(2))
    with pytest.raises(DomainError):
        rot(k3.from_rational(-1))


def test_rational_rotation_group(k3):
    third = IET.rotation(k3, 1, Fraction(1, 3))
    two_thirds = IET.rotation(k3, 1, Fraction(2, 3))
    assert third.compose(third) == two_thirds
    assert third.compose(third).compose(third) == IET.identity(k3, 1)


def test_compose_inverse_random(k3):
    rng = random.Random(41)
    ident = IET.identity(k3, 1)
    for _ in range(20):
        f = random_iet(k3, rng, total=k3.one())
        assert f.compose(f.inverse()) == ident
        assert f.inverse().compose(f) == ident


def test_compose_pointwise_random(k3):
    rng = random.Random(43)
    for _ in range(10):
        f = random_iet(k3, rng, total=k3.one())
        g = random_iet(k3, rng, total=k3.one())
        h = f.compose(g)
        for _ in range(20):
            x = k3.from_rational(Fraction(rng.randint(0, 999), 1000))
            assert h(x) == f(g(x))


def test_compose_requires_same_total(k3):
    f = IET.identity(k3, 1)
    g = IET.identity(k3, 2)
    with pytest.raises(DomainError):
        f.compose(g)


def test_rotate(k3):
    ident = IET.identity(k3, 1, circle=True)
    assert ident.rotate(Fraction(1, 2)) == IET.rotation(k3, 1, Fraction(1, 2))
    theta = k3.gen()
    rot = IET.rotation(k3, 1, theta)
    assert rot.rotate(k3.zero()) == rot
    with pytest.raises(DomainError):
        IET.identity(k3, 1, circle=False).rotate(Fraction(1, 2))


def test_rotate_matches_composition_with_rotation(k3):
    rng = random.Random(47)
    for _ in range(10):
        f = random_iet(k3, rng, total=k3.one(), circle=True)
        c = k3.from_rational(Fraction(rng.randint(1, 9), 10))
        assert f.rotate(c) == IET.rotation(k3, 1, c).compose(f)


def test_scale(k3):
    theta = k3.gen()
    rot = IET.rotation(k3, 1, theta)
    assert rot.scale(1) == rot
    doubled = IET.rotation(k3, 2, theta + theta)
    assert rot.scale(2) == doubled
    with pytest.raises(DomainError):
        rot.scale(k3.zero())


def test_first_return_trivial_and_rotation(k3):
    theta = k3.gen()
    rot = IET.rotation(k3, 1, theta)
    assert rot.first_return(k3.one()) == rot
    half = IET.rotation(k3, 1, Fraction(1, 2))
    ret, times = half._first_return_with_times(Fraction(1, 2))
    assert ret == IET.identity(k3, Fraction(1, 2))
    assert times == [2]


def test_first_return_kac_accounting(k3):
    # sum of (piece length x return time) equals the total length for
    # minimal examples (rotation by an irrational)
    theta = k3.gen()
    rot = IET.rotation(k3, 1, theta)
    ret, times = rot._first_return_with_times(theta)
    acc = k3.zero()
    for (u, v, _), n in zip(ret.pieces(), times):
        acc = acc + (v - u) * n
    assert acc == k3.one()


def test_first_return_cap(k3):
    from ietsaf import IterationCapError
    theta = k3.gen()
    rot = IET.rotation(k3, 1, theta)
    with pytest.raises(IterationCapError):
        rot.first_return(theta, cap=1)


def test_pair_involution_examples(k3):
    a = k3.gen()
    swap = IET.pair_involution(k3, [a, a], [1, 0])
    assert swap == IET.rotation(k3, a + a, a)
    assert swap.compose(swap) == IET.identity(k3, a + a)
    fixed = IET.pair_involution(k3, [a], [0])
    assert fixed == IET.identity(k3, a)
    with pytest.raises(InputError, match="involution"):
        IET.pair_involution(k3, [a, a, a], [1, 2, 0])
    with pytest.raises(InputError, match="mismatch"):
        IET.pair_involution(k3, [a, a * a], [1, 0])


def test_pair_involutions_random(k3):
    rng = random.Random(53)
    for _ in range(20):
        invol = random_pair_involution(k3, rng)
        assert invol.compose(invol) == IET.identity(k3, invol.total)
        assert invol.saf().is_zero()


def test_saf_identity_and_rotation(k3):
    assert IET.identity(k3, 1).saf().is_zero()
    theta = k3.gen()
    wedge = IET.rotation(k3, 1, theta).saf()
    assert wedge.rows[0][1] == 2
    assert wedge.rows[1][0] == -2
    flat = [c for i, row in enumerate(wedge.rows)
            for j, c in enumerate(row) if (i, j) not in ((0, 1), (1, 0))]
    assert all(c == 0 for c in flat)
    assert IET.rotation(k3, 1, Fraction(2, 7)).saf().is_zero()


def test_wedge_algebra(k3):
    theta = k3.gen()
    w = IET.rotation(k3, 1, theta).saf()
    assert (w + (-w)).is_zero()
    assert w + WedgeClass.zero(k3) == w
    with pytest.raises(InputError):
        WedgeClass(k3, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])


def test_saf_homomorphism_random(k3):
    rng = random.Random(59)
    for _ in range(25):
        f = random_iet(k3, rng, total=k3.one())
        g = random_iet(k3, rng, total=k3.one())
        assert f.compose(g).saf() == f.saf() + g.saf()
        assert f.inverse().saf() == -f.saf()


def test_canonical_merges_spurious_splits(k3):
    ident = IET.identity(k3, 1)
    split = IET(k3, 1, [k3.from_rational(Fraction(1, 3)),
                        k3.from_rational(Fraction(2, 3))], [0, 1])
    assert split.canonical().n == 1
    assert split == ident


def test_equality_ignores_circle_flag(k3):
    a = IET.identity(k3, 1, circle=True)
    b = IET.identity(k3, 1, circle=False)
    assert a == b


def test_eval_matches_float_simulation(k3):
    rng = random.Random(61)
    for _ in range(5):
        f = random_iet(k3, rng, total=k3.one(), circle=False)
        pieces = float_pieces(f)
        breaks = [b for b, _, _ in pieces] + [1.0]
        for _ in range(50):
            x = Fraction(rng.randint(0, 2 ** 20 - 1), 2 ** 20)
            if min(abs(float(x) - b) for b in breaks) < 1e-7:
                continue
            exact = f(k3.from_rational(x))
            approx = simulate(pieces, float(x))
            assert abs(float(exact) - approx) < 1e-9 * max(1.0, abs(approx))


def test_cyclic_discontinuities_of_rotation(k3):
    rot = IET.rotation(k3, 1, Fraction(1, 3))
    assert cyclic_discontinuities(rot) == []
    theta = k3.gen()
    assert cyclic_discontinuities(IET.rotation(k3, 1, theta)) == []


def test_rotation_conjugacy_finds_offset(k3):
    rng = random.Random(67)
    for _ in range(10):
        f = random_iet(k3, rng, total=k3.one(), circle=True)
        c = k3.from_rational(Fraction(rng.randint(1, 9), 10))
        rot = IET.rotation(k3, 1, c)
        conj = rot.compose(f).compose(rot.inverse())
        found = rotation_conjugacy(conj, f)
        assert found is not None
        back = IET.rotation(k3, 1, found)
        assert back.compose(f).compose(back.inverse()) == conj


def test_rotation_conjugacy_none_for_different_maps(k3):
    theta = k3.gen()
    f = IET.rotation(k3, 1, theta)
    g = IET.rotation(k3, 1, Fraction(1, 3))
    assert rotation_conjugacy(f, g) is None

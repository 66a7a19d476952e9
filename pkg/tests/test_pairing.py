import random
from fractions import Fraction
from math import factorial, prod

import pytest

from lmocasson.diagrams import EMPTY, CharCombo, disjoint_union
from lmocasson.generators import hbar, strut, strut_power, theta, theta_power, tripod, wheel2
from lmocasson.pairing import (PairingContext, PairingError, big_j, iota_n, little_j,
                               matching_count, perfect_matchings, theta_power_coefficient)

F = Fraction
W, H, I = tripod(1, 2, 3), hbar(1, 2), strut(3)


def power(d, k):
    out = EMPTY
    for _ in range(k):
        out = disjoint_union(out, d)
    return out


def double_factorial(k):
    return prod(range(k, 0, -2)) if k > 0 else 1


def test_circle_value():
    assert PairingContext(3).circle_value == -6
    with pytest.raises(PairingError):
        PairingContext(0)


def test_single_strut_closes_to_minus_two():
    assert big_j(CharCombo.of(strut(1)), 1, PairingContext(1)) == CharCombo.scalar(-2)


def test_odd_leg_count_is_an_error():
    with pytest.raises(PairingError):
        big_j(CharCombo.of(W), 3, PairingContext(1))


def test_tripod_pair_gives_minus_h():
    for n in (1, 2, 3):
        assert big_j(CharCombo.of(power(W, 2)), 3, PairingContext(n)) == -CharCombo.of(H)


@pytest.mark.parametrize("m", [2, 3])
def test_tripod_powers(m):
    got = big_j(CharCombo.of(power(W, 2 * m)), 3, PairingContext(m))
    assert got == CharCombo.of(power(H, m), (-1) ** m * double_factorial(2 * m - 1))


def test_little_j_filters_on_count():
    assert not little_j(CharCombo.of(W), 3, PairingContext(1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_strut_elimination(n):
    ctx = PairingContext(n)
    for m in range(n + 1):
        x = CharCombo.of(disjoint_union(power(W, 2 * m), power(I, n - m)))
        jw = big_j(CharCombo.of(power(W, 2 * m)), 3, ctx)
        assert little_j(x, 3, ctx) == jw.scale((-2) ** (n - m) * factorial(n - m))


def test_strut_recursion_factor():
    for n in range(1, 5):
        ctx = PairingContext(n)
        for m in range(n + 1):
            for k in range(1, n - m + 2):
                up = big_j(CharCombo.of(disjoint_union(power(W, 2 * m), power(I, k))), 3, ctx)
                down = big_j(CharCombo.of(disjoint_union(power(W, 2 * m), power(I, k - 1))), 3, ctx)
                assert up == down.scale(2 * m + 2 * k - 2 - 2 * n)


def test_closures_in_degree_one():
    ctx = PairingContext(1)
    assert iota_n(CharCombo.of(H), (1, 2), ctx) == CharCombo.of(theta())
    assert iota_n(CharCombo.of(wheel2(1)), (1,), ctx) == CharCombo.of(theta())
    three = disjoint_union(disjoint_union(strut(1), strut(2)), strut(3))
    assert iota_n(CharCombo.of(three), (1, 2, 3), ctx) == CharCombo.scalar(-8)


def test_iota_lowers_degree():
    ctx = PairingContext(1)
    x = CharCombo.of(disjoint_union(H, strut(3)))
    out = iota_n(x, (1, 2, 3), ctx)
    assert out.degrees() == {H.degree + 1 - 3}


def test_matching_counts():
    for n in range(1, 5):
        assert matching_count(strut_power(1, n), 1) == double_factorial(2 * n - 1)
    assert sum(1 for _ in perfect_matchings(list(range(8)))) == 105


def test_linearity():
    ctx = PairingContext(2)
    a = CharCombo.of(disjoint_union(power(W, 2), power(I, 1)), F(2, 3))
    b = CharCombo.of(power(I, 2), F(-5, 7))
    assert little_j(a + b, 3, ctx) == little_j(a, 3, ctx) + little_j(b, 3, ctx)
    assert little_j(a.scale(4), 3, ctx) == little_j(a, 3, ctx).scale(4)


def test_label_commutativity():
    rng = random.Random(8)
    gens = [strut(1), strut(2), tripod(1, 2, 3), H, wheel2(1), wheel2(2), strut(3)]
    tried = 0
    while tried < 30:
        mono = EMPTY
        for _ in range(rng.randint(1, 4)):
            mono = disjoint_union(mono, rng.choice(gens))
        counts = mono.leg_counts()
        if any(v % 2 for v in counts.values()):
            continue
        tried += 1
        ctx = PairingContext(rng.randint(1, 2))
        x = CharCombo.of(mono)
        for i, k in ((1, 2), (1, 3), (2, 3)):
            assert (little_j(little_j(x, i, ctx), k, ctx)
                    == little_j(little_j(x, k, ctx), i, ctx))


def test_theta_power_coefficient():
    assert theta_power_coefficient(CharCombo.of(theta()), 1) == 1
    assert theta_power_coefficient(CharCombo(), 2) == 0
    assert theta_power_coefficient(CharCombo.of(theta_power(3), F(2, 7)), 3) == F(2, 7)

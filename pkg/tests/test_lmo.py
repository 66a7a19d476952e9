from fractions import Fraction
from math import prod
from pathlib import Path

import pytest

from lmocasson.diagrams import CharCombo
from lmocasson.generators import theta
from lmocasson.lescop import lambda_surgery
from lmocasson.lmo import (MAX_HN_DEGREE, b_coefficient, c_of_l, h_n, iota1_check, u_constant,
                           z1, zn_b2, zn_direct)
from lmocasson.pairing import theta_power_coefficient
from lmocasson.surgery import PreconditionError, SurgeryPresentation

F = Fraction
FIXTURES = Path(__file__).parent / "fixtures"
THETA = CharCombo.of(theta())
BORROMEAN = SurgeryPresentation((0, 0, 1), {(1, 2, 3): 1})
TREFOIL = SurgeryPresentation((1,), a1=(1,))


@pytest.mark.parametrize("args,expected", [((1, 0), F(1, 16)), ((-1, 0), F(1, 16)),
                                           ((0, 0), F(1, 24)), ((1, 1), F(-7, 16))])
def test_b_coefficient(args, expected):
    assert b_coefficient(*args) == expected


def test_unknot_constants():
    assert u_constant(1) == CharCombo.scalar(-1) + THETA.scale(F(1, 16))
    assert u_constant(-1) == CharCombo.scalar(1) + THETA.scale(F(1, 16))
    with pytest.raises(ValueError):
        u_constant(2)


@pytest.mark.parametrize("s,expected", [
    (SurgeryPresentation((1,)), F(-1, 16)),
    (TREFOIL, F(7, 16)),
    (BORROMEAN, F(1, 2)),
    (SurgeryPresentation((0,)), F(-1, 24)),
])
def test_c_of_l(s, expected):
    assert c_of_l(s) == expected


def test_iota1_check_examples():
    assert iota1_check(SurgeryPresentation((1,))) == u_constant(1)
    assert iota1_check(BORROMEAN) == THETA.scale(F(-1, 2))
    # only the two-wheel survives; c = -1/24 and the sign (-1)^1 make it +1/24
    assert iota1_check(SurgeryPresentation((0,))) == THETA.scale(F(1, 24))


def test_iota1_check_mixed_presentation():
    s = SurgeryPresentation((2, -1, 3, 1), {(1, 2, 4): 2, (2, 3, 4): -1}, {(1, 3): 3},
                            (F(1, 2), 0, -1, 0))
    expected = CharCombo.scalar(prod(s.framings)) + THETA.scale(c_of_l(s))
    assert iota1_check(s) == expected


@pytest.mark.parametrize("s,expected", [
    (SurgeryPresentation((1,)), 0),
    (SurgeryPresentation((-1,)), 0),
    (TREFOIL, F(1, 2)),
    (SurgeryPresentation((0,)), F(1, 24)),
    (BORROMEAN, F(1, 2)),
])
def test_z1_examples(s, expected):
    assert z1(s).theta_coefficient == expected


def test_poincare_sphere_by_hand():
    # numerator -(1 + 7/16 T), denominator -1 + T/16: degree-one part of the quotient
    num0, num1, den0, den1 = -1, F(-7, 16), -1, F(1, 16)
    assert (num1 * den0 - num0 * den1) / den0 ** 2 == z1(TREFOIL).theta_coefficient
    assert z1(TREFOIL).theta_coefficient == lambda_surgery(TREFOIL) / 2


def test_h1_is_half_theta():
    h = h_n(1)
    assert h.combo == THETA.scale(F(1, 2))
    assert h.theta_projection == F(1, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_hn_regression_fixture(n):
    frozen = (FIXTURES / f"h{n}.txt").read_text().rstrip("\n")
    assert h_n(n).combo.serialize() == frozen


@pytest.mark.parametrize("n,proj", [(1, F(1, 2)), (2, F(1, 8)), (3, F(1, 48))])
def test_hn_theta_projection(n, proj):
    """Only the within-copy matchings close to a power of Theta.

    Every matching of H^n pairs the 2n legs labelled 1 and the 2n legs
    labelled 2; the Theta^n term arises exactly when each copy of H is
    closed onto itself, once, with coefficient 1, so the projection is
    1/(2^n n!).
    """
    h = h_n(n)
    assert h.theta_projection == proj
    assert theta_power_coefficient(h.combo, n) == proj


def test_hn_bounds():
    with pytest.raises(ValueError):
        h_n(0)
    with pytest.raises(ValueError):
        h_n(MAX_HN_DEGREE + 1)


def test_zn_degree_one_agrees_with_z1():
    assert zn_b2(BORROMEAN, 1) == THETA.scale(z1(BORROMEAN).theta_coefficient)


def test_zn_degree_two_example():
    s = SurgeryPresentation((0, 0, 2), mu22={(1, 2): 1})
    assert zn_b2(s, 2) == h_n(2).combo.scale(4)
    assert zn_direct(s, 2) == h_n(2).combo.scale(4)


def test_zn_vanishing_lambda():
    s = SurgeryPresentation((0, 0, 3))
    for n in (1, 2, 3):
        assert not zn_b2(s, n)


def test_zn_degree_three_direct():
    s = SurgeryPresentation((0, 1, 0), {(1, 2, 3): 1})
    assert zn_direct(s, 3) == zn_b2(s, 3, cross_check=False)


def test_zn_preconditions():
    with pytest.raises(PreconditionError):
        zn_b2(SurgeryPresentation((0, 1)), 1)
    with pytest.raises(ValueError):
        zn_b2(BORROMEAN, 4)

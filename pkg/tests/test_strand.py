from fractions import Fraction

import pytest

from lmocasson.diagrams import EMPTY, Character, CharCombo
from lmocasson.generators import strut, strut_power, wheel2
from lmocasson.strand import StrandError, chi, juxtapose, strand_space, stu_relation

F = Fraction


def chords(*pairs):
    """Chord diagram on the strand with chords joining the given positions."""
    n = 2 * len(pairs)
    return CharCombo.of(Character.build(tuple(range(1, n + 1)),
                                        [(a - 1, b - 1) for a, b in pairs]))


PARALLEL = chords((1, 2), (3, 4))
NESTED = chords((1, 4), (2, 3))
CROSSED = chords((1, 3), (2, 4))


def test_dimensions():
    space = strand_space()
    assert [space.dimension(k) for k in range(3)] == [1, 1, 2]


def test_chord_relations_in_degree_two():
    space = strand_space()
    assert space.is_zero(PARALLEL - NESTED)
    assert not space.is_zero(PARALLEL - CROSSED)
    assert not space.is_zero(PARALLEL)


def test_symmetrization_of_two_struts():
    assert chi(CharCombo.of(strut_power(1, 2))) == (PARALLEL + NESTED + CROSSED).scale(F(1, 3))


def test_wheel_on_strand_is_chord_difference():
    space = strand_space()
    phi = chi(CharCombo.of(wheel2(1)))
    assert space.is_zero(phi - (PARALLEL - CROSSED).scale(2))


def test_cross_product_identity():
    i = CharCombo.of(strut(1))
    lhs = juxtapose(chi(i), chi(i))
    rhs = chi(CharCombo.of(strut_power(1, 2)) + CharCombo.of(wheel2(1), F(1, 6)))
    assert strand_space().is_zero(lhs - rhs)


def test_unit_and_degree_one():
    i = chi(CharCombo.of(strut(1)))
    assert juxtapose(CharCombo.of(EMPTY), i) == strand_space().reduce(i)


def test_stu_skips_legs_on_struts():
    d = Character.build((1, 2), [(0, 1)])
    assert stu_relation(d, 0) is None


def test_relations_vanish_in_quotient():
    space = strand_space()
    for rel in space.relations[:50]:
        assert space.is_zero(rel)


def test_degree_limit():
    with pytest.raises(StrandError):
        chi(CharCombo.of(strut_power(1, 3)))

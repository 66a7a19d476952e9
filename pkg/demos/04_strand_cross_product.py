"""
Diagrams on a strand and the symmetrization map
================================================

Symmetrizing the legs of a character along an interval turns the
disjoint-union product into stacking, but only up to a correction.  For a
single strut I the correction is a sixth of the two-leg wheel:

    chi(I) . chi(I) = chi(I^2 + phi/6)

Here this is checked in the space of strand diagrams of degree at most two
modulo the STU relation.
"""
from fractions import Fraction

from lmocasson import CharCombo, strut, wheel2
from lmocasson.generators import strut_power
from lmocasson.strand import chi, juxtapose, strand_space

space = strand_space()
print("dimensions by degree:", [space.dimension(k) for k in range(3)])

# %%
# Two chords side by side, compared with the symmetrized square.
I = CharCombo.of(strut(1))
stacked = juxtapose(chi(I), chi(I))
naive = space.reduce(chi(CharCombo.of(strut_power(1, 2))))
print("stacked - chi(I^2) is zero?", space.is_zero(stacked - naive))

# %%
# Adding the wheel correction closes the gap exactly.
corrected = chi(CharCombo.of(strut_power(1, 2)) + CharCombo.of(wheel2(1), Fraction(1, 6)))
print("stacked - chi(I^2 + phi/6) is zero?", space.is_zero(stacked - corrected))

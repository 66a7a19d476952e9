"""
The Casson-Walker-Lescop invariant from surgery data
=====================================================

A closed 3-manifold obtained by surgery on an algebraically split link is
described by a handful of integers: the framings, the triple Milnor
invariants mu_ijk, the invariants mu_iijj and half the second derivative
of each component's Alexander polynomial at 1.  That is all the input
the surgery formula needs.
"""
from fractions import Fraction
from pathlib import Path

from lmocasson import SurgeryPresentation, derived_stats, lambda_b2, lambda_surgery
from lmocasson.surgery import parse_presentation

DATA = Path(__file__).parent / "data"

# %%
# Surgery on the unknot with framing +-1 gives back the 3-sphere, and the
# invariant vanishes.
for f in (1, -1):
    print(f"unknot, framing {f:+d}:", lambda_surgery(SurgeryPresentation((f,))))

# %%
# The trefoil has Alexander polynomial t - 1 + 1/t, whose second derivative
# at 1 is 2.  Casson's formula for +1 surgery predicts lambda = 1 (the
# Poincare sphere).
trefoil = parse_presentation((DATA / "trefoil_plus1.json").read_text())
print("Poincare sphere:", lambda_surgery(trefoil))

# %%
# Lens spaces L(p, 1) come from p-surgery on the unknot.  The values follow
# the Dedekind sum formula -p s(1, p) / 2.
for p in range(1, 7):
    print(f"L({p},1):", lambda_surgery(SurgeryPresentation((p,))))

# %%
# With exactly two zero framings the first Betti number is 2 and a much
# shorter closed formula applies.  Both routes must agree.
borromean = parse_presentation((DATA / "borromean_b2.json").read_text())
stats = derived_stats(borromean)
print("b1 =", stats.b1, " torsion =", stats.torsion_order)
print("closed formula:", lambda_b2(borromean), " surgery formula:", lambda_surgery(borromean))

s = SurgeryPresentation((0, 0, 2, -3), {(1, 2, 3): 2, (1, 2, 4): 1}, {(1, 2): 1},
                        a1=(Fraction(1, 2), 0, 0, -1))
print("larger example:", lambda_b2(s), lambda_surgery(s))

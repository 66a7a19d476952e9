"""
The degree-one part of the LMO invariant
=========================================

The LMO invariant lives in a space of closed trivalent diagrams.  In degree
one that space is spanned by the theta graph, so Z_1 is a single rational
number.  It is computed here through the full diagram pipeline: logarithm
of the Kontsevich integral, truncated exponential, then the closing map
iota_1 that glues legs with the same label in all possible ways.
"""
from lmocasson import SurgeryPresentation, iota1_check, lambda_surgery, log_character, u_constant, z1
from lmocasson.cli import describe_combo
from lmocasson.generators import strut, wheel2
from lmocasson.surgery import derived_stats

# %%
# The building blocks for the unknot with framing +1: a strut with
# coefficient 1/2 and a two-leg wheel with coefficient 1/16.
x = log_character(SurgeryPresentation((1,)), 1)
print("strut:", x.coefficient(strut(1)), " wheel:", x.coefficient(wheel2(1)))

# %%
# Closing it up yields the normalization constant used in the denominator.
print("U+ :", " + ".join(describe_combo(u_constant(1))))
print("U- :", " + ".join(describe_combo(u_constant(-1))))

# %%
# For a general presentation the closed diagram is checked against an
# explicit formula before it is used.  A mismatch raises ``EngineError``.
borromean = SurgeryPresentation((0, 0, 1), {(1, 2, 3): 1})
print("closure:", " + ".join(describe_combo(iota1_check(borromean))))

# %%
# Z_1 agrees with (-1)^b1 lambda / 2 on every example.
for name, s in [("S^3", SurgeryPresentation((1,))),
                ("Poincare sphere", SurgeryPresentation((1,), a1=(1,))),
                ("S^1 x S^2", SurgeryPresentation((0,))),
                ("b1 = 2 example", borromean),
                ("mixed", SurgeryPresentation((2, -1, 3), {(1, 2, 3): 2}, {(1, 3): -1}))]:
    b1 = derived_stats(s).b1
    print(f"{name:16s} Z1 = {z1(s).theta_coefficient!s:>6}   "
          f"(-1)^b1 lambda/2 = {(-1) ** b1 * lambda_surgery(s) / 2}")

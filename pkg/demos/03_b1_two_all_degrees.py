"""
First Betti number two: every degree at once
=============================================

When b1 = 2 the whole LMO invariant is determined by lambda: in degree n it
equals lambda^n times a fixed element H_n that does not depend on the
manifold.  H_n is computed by closing n copies of the H diagram.
"""
from lmocasson import SurgeryPresentation, h_n, lambda_b2, zn_b2
from lmocasson.cli import describe_combo
from lmocasson.lmo import zn_direct

# %%
# H_1 is half a theta graph.  Higher H_n are combinations of several closed
# diagrams; their Theta^n coefficient is 1/(2^n n!) and in particular never
# zero.
for n in (1, 2, 3):
    h = h_n(n)
    print(f"H_{n}: {len(h.combo)} diagrams, Theta^{n} coefficient {h.theta_projection}")

# %%
# For a concrete manifold the direct diagram computation and lambda^n H_n
# coincide.  The direct route also confirms that nothing survives below
# degree n.
s = SurgeryPresentation((0, 0, 2), mu22={(1, 2): 1})
lam = lambda_b2(s)
print("lambda =", lam)
for n in (1, 2):
    assert zn_direct(s, n) == h_n(n).combo.scale(lam ** n)
    print(f"Z_{n}:")
    for line in describe_combo(zn_b2(s, n)):
        print("  ", line)

# %%
# Degree three is also in reach of the direct route, it just takes longer.
t = SurgeryPresentation((0, 1, 0), {(1, 2, 3): 1})
print("degree 3 agrees:", zn_direct(t, 3) == zn_b2(t, 3, cross_check=False))

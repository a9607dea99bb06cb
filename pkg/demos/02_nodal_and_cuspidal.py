"""Counting nodal and cuspidal curves with tangency conditions.

A free node contributes the class (3d^2-6d+3) yd b1^2 + (3d-3) yd^2 b1 + yd^3
on an extra plane tracking the singular point; a cusp contributes an
analogous degree-4 class.  Chains with tangency points are evaluated by a
recursion that trades a tangency slot for divisor classes and a degeneration
term.
"""

from tangency.cusp import eval_A2F_T1s
from tangency.nodal import class_A1L, class_A1L_via_euler, derive_A1F_coeffs, eval_A1F_T
from tangency.ring import RingElem, SpaceSig, delta, integrate

# The free-node class coefficients are not assumed: they are derived by
# pairing the node-on-a-line cycle against test monomials.
for d in (3, 4, 5):
    print(f"free-node class coefficients at d={d}:", derive_A1F_coeffs(d))

# Classical check: nodal curves through dim-1 points, the famous 3(d-1)^2.
print("\nnodal curves through delta(d)-1 points:")
for d in range(2, 8):
    c = RingElem.monomial(SpaceSig(d, 1, 0), y1=2, yd=delta(d) - 1)
    print(f"  d={d}: {eval_A1F_T(d, (), c).ordered_value}  "
          f"(3(d-1)^2 = {3 * (d - 1) ** 2})")

# Nodal curves with the tangency profile (1,1,2) from the first demo.
print("\nnodal curves with tangency profile (1,1,2), unordered:")
for d in (7, 8):
    c = RingElem.monomial(SpaceSig(d, 1, 3), y1=2, yd=delta(d) - 5)
    print(f"  d={d}: {eval_A1F_T(d, (1, 1, 2), c).unordered_value}")

# Two independent routes to "node on the line": the explicit cycle
# [A1F]*(y1+b1), and an Euler-class computation on the smooth chain.
print("\nnode-on-the-line, two routes:")
for d in (3, 4, 5):
    c = RingElem.monomial(SpaceSig(d, 1, 0), y1=1, yd=delta(d) - 1)
    print(f"  d={d}: cycle {integrate(class_A1L(d) * c)}, "
          f"euler {class_A1L_via_euler(d, c)}")

# Cuspidal curves: through delta-2 points (12(d-1)(d-2)), and the cuspidal
# cubics tangent to a line through 6 points.
print("\ncuspidal curves through delta(d)-2 points:")
for d in range(3, 8):
    c = RingElem.monomial(SpaceSig(d, 1, 0), y1=2, yd=delta(d) - 2)
    print(f"  d={d}: {eval_A2F_T1s(d, 0, c).ordered_value}")

c = RingElem.monomial(SpaceSig(3, 1, 1), y1=2, yd=6)
print("\ncuspidal cubics through 6 points tangent to a line:",
      eval_A2F_T1s(3, 1, c).ordered_value)  # 60

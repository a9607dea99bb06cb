"""Counting smooth plane curves tangent to a fixed line.

The calculator works in a truncated product of projective-space cohomology
rings: y1 is the hyperplane class on the space of lines, yd the hyperplane
class on the space of degree-d curves, and each tangency point contributes a
plane with hyperplane class a_i.  A count is the integral of a singularity /
tangency class against a constraint monomial of complementary degree.
"""

from tangency.ring import RingElem, SpaceSig, delta
from tangency.tangency import eval_T

# The classic warm-up: conics through 4 points tangent to a fixed line.
# y1^2 fixes the line, yd^4 imposes the 4 points.
c = RingElem.monomial(SpaceSig(2, 0, 1), y1=2, yd=4)
print("conics through 4 points tangent to a line:",
      eval_T(2, (1,), c).ordered_value)  # 2

# Higher-degree curves with two simple tangencies and one second-order
# tangency (a flex-like contact of order 3) to the same line.
print("\nsmooth curves with tangency profile (1,1,2), unordered:")
for d in range(4, 10):
    c = RingElem.monomial(SpaceSig(d, 0, 3), y1=2, yd=delta(d) - 4)
    res = eval_T(d, (1, 1, 2), c)
    print(f"  d={d}: {res.unordered_value}"
          f"  (ordered {res.ordered_value}, symmetry {res.symmetry_factor})")

# Pinning the first simple tangency point at a fixed point of the line
# (extra factor a1, one fewer free point condition) breaks the symmetry
# between the two order-1 slots.
print("\nsame profile with the first tangency point fixed:")
for d in (7, 8, 9):
    c = RingElem.monomial(SpaceSig(d, 0, 3), y1=2, yd=delta(d) - 5, a=(1, 0, 0))
    res = eval_T(d, (1, 1, 2), c)
    print(f"  d={d}: {res.ordered_value}  (symmetry {res.symmetry_factor})")

# A constraint of the wrong total degree integrates to zero automatically.
c = RingElem.monomial(SpaceSig(4, 0, 1), y1=2, yd=5)
print("\nwrong-dimensional constraint evaluates to:",
      eval_T(4, (1,), c).ordered_value)

"""Rational plane curves tangent to a line, from associativity relations.

kontsevich_nd(d) counts rational degree-d curves through 3d-1 points via the
classical quadratic recursion; nd_T1(d) counts rational curves through 3d-2
points tangent to a fixed line via an analogous recursion driven only by the
n_d values.  For cubics, "rational" means "one node", so the result must
match the nodal-curve route from the cohomology-ring calculator.
"""

from tangency.nodal import eval_A1F_T
from tangency.ring import RingElem, SpaceSig
from tangency.wdvv import gw_table

print(f"{'d':>3} {'n_d':>20} {'tangent to a line':>20}")
for d, (n, t) in gw_table(8).items():
    print(f"{d:>3} {n:>20} {t:>20}")

c = RingElem.monomial(SpaceSig(3, 1, 1), y1=2, yd=7)
nodal_route = eval_A1F_T(3, (1,), c).ordered_value
print(f"\ntangent rational cubics, nodal route: {nodal_route}")
print(f"tangent rational cubics, associativity route: {gw_table(3)[3][1]}")

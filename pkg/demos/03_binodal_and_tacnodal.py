"""Binodal and tacnodal curves.

The two-node class with both nodes on the line is reached from a
node-on-the-line chain by imposing a vanishing normal derivative at a
tangency point and subtracting the collision stratum.  Letting the two nodes
collide produces the tacnode-on-the-line class, and pairing against test
monomials recovers the coefficient tables of the free binodal and tacnodal
classes in closed form.
"""

from tangency.multisingular import (
    coeff_table_A1FA1F,
    coeff_table_A3F,
    eval_A1LA1L,
    eval_PA3,
)
from tangency.ring import RingElem, SpaceSig, delta

# Binodal quartics with both nodes on the line, through 12 points.
c = RingElem.monomial(SpaceSig(4, 2, 0), yd=delta(4) - 2)
ordered = eval_A1LA1L(4, c)
print("binodal quartics, both nodes on the line (ordered):", ordered)
print("unordered:", ordered // 2)  # 225

# Tacnodal quartics through 11 points.
print("tacnodal quartics through 11 points:",
      eval_PA3(4, RingElem.monomial(SpaceSig(4, 1, 0), yd=delta(4) - 3)))  # 200

# The full coefficient tables.  Both constructors recompute every entry and
# raise if anything disagrees with the known closed forms.
print("\nfree binodal class coefficients:")
for d in (4, 5, 6):
    table = coeff_table_A1FA1F(d)
    row = ", ".join(f"C{i}{j}{k}={v}" for (i, j, k), v in sorted(table.items()))
    print(f"  d={d}: {row}")

print("\nfree tacnodal class coefficients:")
for d in (4, 5, 6):
    table = coeff_table_A3F(d)
    row = ", ".join(f"C{i}{j}={v}" for (i, j), v in sorted(table.items()))
    print(f"  d={d}: {row}")

"""Cross-checking the intersection-theoretic evaluator against an
independent degeneration recursion.

N(d, delta, alpha, beta) counts delta-nodal degree-d curves with prescribed
contact to a fixed line: alpha lists contacts at fixed points, beta at
moving points.  The recursion only ever degenerates curves to the line plus
a lower-degree curve, so it shares no code (and no geometry) with the
cohomology-ring evaluator — agreement is a strong consistency check.
"""

from tangency.caporaso_harris import CHKey, ch_from_profile, ch_invariant
from tangency.nodal import eval_A1F_T
from tangency.ring import RingElem, SpaceSig, delta

# Severi degrees with full transverse contact reproduce classical counts.
print("one-node Severi degrees:")
for d in range(2, 8):
    print(f"  d={d}: N = {ch_invariant(CHKey(d, 1, (), (d,)))}"
          f"  (3(d-1)^2 = {3 * (d - 1) ** 2})")

# A tangency of order k is a contact of order k+1; ch_from_profile builds
# the recursion key from an evaluator-style query.
print("\nevaluator vs recursion, one moving tangency:")
for d in (3, 4, 5, 6):
    key = ch_from_profile(d, (1,), (0,), 1)
    c = RingElem.monomial(SpaceSig(d, 1, 1), y1=2, yd=delta(d) - 2)
    ev = eval_A1F_T(d, (1,), c).ordered_value
    print(f"  d={d}: evaluator {ev}, recursion {ch_invariant(key)}  key={key}")

print("\nevaluator vs recursion, one node and tangent at a fixed point:")
for d in (4, 5, 6):
    key = ch_from_profile(d, (1,), (1,), 1)
    c = RingElem.monomial(SpaceSig(d, 1, 1), y1=2, yd=delta(d) - 3, a=(1,))
    ev = eval_A1F_T(d, (1,), c).ordered_value
    print(f"  d={d}: evaluator {ev}, recursion {ch_invariant(key)}  key={key}")

"""Rational plane curve counts from the WDVV associativity relations.

kontsevich_nd(d) is the number of rational degree-d plane curves through
3d-1 generic points, from the classical recursion.  nd_T1(d) is the number
of rational degree-d curves through 3d-2 generic points and tangent (to
first order) to a fixed line; it is obtained by equating two boundary
expressions of the tangency divisor on the two-pointed space of stable maps
and only needs the n_d values as input.

Both counts grow quickly (nd_T1(8) is about 5.9e13 with much larger
intermediates), so everything is exact integer arithmetic.
"""

from __future__ import annotations

from functools import cache
from math import comb


@cache
def kontsevich_nd(d: int) -> int:
    """Rational degree-d plane curves through 3d-1 generic points."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if d == 1:
        return 1
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += kontsevich_nd(d1) * kontsevich_nd(d2) * (
            d1 ** 2 * d2 ** 2 * comb(3 * d - 4, 3 * d1 - 2)
            - d1 ** 3 * d2 * comb(3 * d - 4, 3 * d1 - 1)
        )
    return total


def nd_T1(d: int) -> int:
    """Rational degree-d curves through 3d-2 points, tangent to a fixed line."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += (
            comb(3 * d - 4, 3 * d1 - 2) * d1 * d2
            - comb(3 * d - 4, 3 * d1 - 1) * d1 * (d1 - 1)
        ) * kontsevich_nd(d1) * kontsevich_nd(d2) * d1 * d2
    return total


def gw_table(max_d: int) -> dict:
    """Table {d: (n_d, N_d^T1)} for d = 1..max_d."""
    return {d: (kontsevich_nd(d), nd_T1(d)) for d in range(1, max_d + 1)}

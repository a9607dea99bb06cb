"""Counts of binodal and tacnodal plane curves.

The binodal class [A1L A1L] (two ordered nodes, both on the line) is reached
from a node-on-the-line chain with one tangency point by imposing a vanishing
normal derivative at the tangency point:

    [A1L A1L] . c = [A1L T1] . (yd - y1 + (d-1) b2) . c  -  [P^(2)A1] . beta,

where the subtracted term accounts for the tangency point running into the
existing node, and beta merges the second singular point's exponent onto the
first.  In the collision limit the leading orders of f(t,0) = 0 and
f_x(t,0) = 0 force both f_20 and f_30 to vanish at the node, so the
degenerate locus is P^(2)A1 (branch tangent to second order, codimension 6),
which is exactly complementary in dimension; it contributes with multiplicity
one.  The tacnode class [PA3] (tacnode on the line, branch along the line)
arises when the two nodes of [A1L A1L] collide:

    [PA3] . c = [A1L A1L] . (b1 + b2 - y1) . c.

Both classes determine the coefficients of the corresponding free classes
[A1F A1F] and [A3F]; the tables computed here are checked against the known
closed forms and an inconsistency raises immediately.
"""

from __future__ import annotations

from .evaluator import eval_chain, head_pa1
from .ring import (
    RingElem,
    SpaceSig,
    add_b,
    b,
    merge_b_into_first,
    rename_b_to_last_a,
    y1,
    yd,
)


def eval_A1LA1L(d: int, c: RingElem) -> int:
    """Ordered count [A1L A1L] . c: two ordered nodes, both on the line.

    The constraint lives on the 0-pointed two-singular-point space (variables
    y1, yd, b1, b2 only).
    """
    sig = SpaceSig(d, 2, 0)
    if c.sig != sig:
        raise ValueError(f"constraint lives on {c.sig}, expected {sig}")
    euler = yd(sig) - y1(sig) + (d - 1) * b(sig, 2)
    # [A1L T1]: rename the second singular point into the tangency slot.
    left = rename_b_to_last_a(euler * c, 2)
    main = eval_chain(head_pa1(0), (1,), left)
    correction = eval_chain(head_pa1(2), (), merge_b_into_first(c))
    return main - correction


def eval_PA3(d: int, c: RingElem) -> int:
    """[PA3] . c: tacnode on the line, with the line as the tangent branch.

    The constraint lives on the 0-pointed one-singular-point space; validity
    of the underlying collision argument needs d > 3.
    """
    sig = SpaceSig(d, 1, 0)
    if c.sig != sig:
        raise ValueError(f"constraint lives on {c.sig}, expected {sig}")
    up = add_b(c)
    divisor = b(up.sig, 1) + b(up.sig, 2) - y1(up.sig)
    return eval_A1LA1L(d, divisor * up)


def closed_form_A1FA1F(d: int) -> dict:
    """Known coefficients C_ijk of [A1F A1F] = sum C_ijk yd^i b1^j b2^k."""
    return {
        (2, 2, 2): 9 * d**4 - 36 * d**3 + 12 * d**2 + 81 * d - 66,
        (3, 1, 2): 9 * d**3 - 27 * d**2 - d + 30,
        (3, 2, 1): 9 * d**3 - 27 * d**2 - d + 30,
        (4, 2, 0): 3 * d**2 - 6 * d - 4,
        (4, 1, 1): 9 * d**2 - 18 * d + 2,
        (4, 0, 2): 3 * d**2 - 6 * d - 4,
        (5, 1, 0): 3 * d - 3,
        (5, 0, 1): 3 * d - 3,
        (6, 0, 0): 1,
    }


def coeff_table_A1FA1F(d: int) -> dict:
    """Coefficients of the free binodal class, computed from [A1L A1L].

    Each coefficient C_ijk is an intersection number of [A1L A1L] against a
    complementary monomial.  The table is completed by the symmetry
    C_ijk = C_ikj and checked against the closed form.
    """
    if d < 4:
        raise ValueError(f"binodal table requires d > 3, got {d}")
    sig = SpaceSig(d, 2, 0)
    dd = sig.delta
    integrals = {
        (2, 2, 2): (dd - 2, 0, 0),
        (3, 1, 2): (dd - 3, 1, 0),
        (4, 2, 0): (dd - 4, 2, 0),
        (4, 1, 1): (dd - 4, 1, 1),
        (5, 1, 0): (dd - 5, 1, 2),
        (6, 0, 0): (dd - 6, 2, 2),
    }
    table = {}
    for (i, j, k), (s, nb1, nb2) in integrals.items():
        table[(i, j, k)] = eval_A1LA1L(d, RingElem.monomial(sig, yd=s, b=(nb1, nb2)))
    for (i, j, k) in list(table):
        table[(i, k, j)] = table[(i, j, k)]
    expected = closed_form_A1FA1F(d)
    if table != expected:
        raise RuntimeError(
            f"binodal coefficient table disagrees with closed form at d={d}: "
            f"computed {table}, expected {expected}"
        )
    return table


def closed_form_A3F(d: int) -> dict:
    """Known coefficients C_ij of [A3F] = sum C_ij yd^i b1^j."""
    return {
        (3, 2): 50 * d**2 - 192 * d + 168,
        (4, 1): 25 * d - 48,
        (5, 0): 5,
    }


def coeff_table_A3F(d: int) -> dict:
    """Coefficients of the free tacnode class, computed from [PA3]."""
    if d < 4:
        raise ValueError(f"tacnode table requires d > 3, got {d}")
    sig = SpaceSig(d, 1, 0)
    dd = sig.delta
    table = {
        (3, 2): eval_PA3(d, RingElem.monomial(sig, yd=dd - 3)),
        (4, 1): eval_PA3(d, RingElem.monomial(sig, yd=dd - 4, b=(1,))),
        (5, 0): eval_PA3(d, RingElem.monomial(sig, yd=dd - 5, b=(2,))),
    }
    expected = closed_form_A3F(d)
    if table != expected:
        raise RuntimeError(
            f"tacnode coefficient table disagrees with closed form at d={d}: "
            f"computed {table}, expected {expected}"
        )
    return table


def class_A3F(d: int) -> RingElem:
    """Free-tacnode class assembled from the verified coefficient table."""
    sig = SpaceSig(d, 1, 0)
    table = coeff_table_A3F(d)
    out = RingElem.zero(sig)
    for (i, j), coeff in table.items():
        out = out + RingElem.monomial(sig, yd=i, b=(j,), coeff=coeff)
    return out


def class_A1FA1F(d: int) -> RingElem:
    """Free binodal class assembled from the verified coefficient table."""
    sig = SpaceSig(d, 2, 0)
    table = coeff_table_A1FA1F(d)
    out = RingElem.zero(sig)
    for (i, j, k), coeff in table.items():
        out = out + RingElem.monomial(sig, yd=i, b=(j, k), coeff=coeff)
    return out

"""Counts of 1-nodal plane curves with tangency conditions.

Three families of classes are handled:

  * the free node [A1F] (node at a marked point anywhere in the plane),
    with explicit class (3d^2-6d+3) yd b1^2 + (3d-3) yd^2 b1 + yd^3;
  * the node on the line [A1L] = [A1F] * (y1 + b1);
  * the branch-tangent node P^(r)A1 (node on the line, one branch tangent
    to the line to order r), reached when a tangency point collides with
    the node.

The node-on-the-line class also arises as an Euler class: a first-order
tangency point whose curve has vanishing normal derivative there, i.e.
[A1L] . c = [T1] . (yd - y1 + (d-1) b1) . c with the marked point of T1
playing the role of the nodal point.  Both routes are exposed so they can
be checked against each other.
"""

from __future__ import annotations

from .evaluator import (
    HEAD_A1F,
    HEAD_T,
    eval_chain,
    head_pa1,
    node_free_class,
)
from .ring import RingElem, SpaceSig, b, rename_b_to_last_a, y1, yd
from .tangency import CountResult, _make_result


def class_A1F(d: int) -> RingElem:
    """Explicit free-node class on the 0-pointed one-singular-point space."""
    return node_free_class(SpaceSig(d, 1, 0))


def class_A1L(d: int) -> RingElem:
    """Node-on-the-line class [A1F] * (y1 + b1)."""
    sig = SpaceSig(d, 1, 0)
    return node_free_class(sig) * (y1(sig) + b(sig, 1))


def class_A1L_via_euler(d: int, c: RingElem) -> int:
    """[A1L] . c computed by the Euler-class route through [T1].

    The nodal point is carried by the b-slot of c; it is renamed to a
    tangency point before feeding the smooth evaluator.
    """
    sig = SpaceSig(d, 1, 0)
    if c.sig != sig:
        raise ValueError(f"constraint lives on {c.sig}, expected {sig}")
    euler = yd(sig) - y1(sig) + (d - 1) * b(sig, 1)
    return eval_chain(HEAD_T, (1,), rename_b_to_last_a(euler * c, 1))


def derive_A1F_coeffs(d: int) -> tuple:
    """Recover the three coefficients of the free-node class from scratch.

    Computes ([A1L].y1 yd^(delta-1), [A1L].y1^2 yd^(delta-2),
    [A1L].y1^2 b1 yd^(delta-3)) via the Euler route; the result must equal
    (3d^2-6d+3, 3d-3, 1).
    """
    sig = SpaceSig(d, 1, 0)
    dd = sig.delta
    c12 = class_A1L_via_euler(d, RingElem.monomial(sig, y1=1, yd=dd - 1))
    c21 = class_A1L_via_euler(d, RingElem.monomial(sig, y1=2, yd=dd - 2))
    c30 = class_A1L_via_euler(d, RingElem.monomial(sig, y1=2, yd=dd - 3, b=(1,)))
    return (c12, c21, c30)


def eval_A1F_T(d: int, profile, c: RingElem) -> CountResult:
    """Ordered count [A1F T_{k1}...T_{kn}] . c of 1-nodal tangent curves."""
    profile = tuple(profile)
    warnings = []
    k, n = sum(profile), len(profile)
    if n and d <= k + n:
        warnings.append(f"validity bound requires d > k+n = {k + n}; got d = {d}")
    ordered = eval_chain(HEAD_A1F, profile, c)
    return _make_result(ordered, profile, c, warnings)


def eval_A1L_T(d: int, profile, c: RingElem) -> CountResult:
    """Ordered count [A1L T_{k1}...T_{kn}] . c (node forced onto the line).

    With tangency points present this is the chain with a P^(0)A1 head, not
    [A1F T...] * (y1 + b1): the naive product picks up an excess component
    supported where a tangency point runs into the node, which the chain
    recursion excludes.  For an empty profile the two agree.
    """
    profile = tuple(profile)
    warnings = []
    k, n = sum(profile), len(profile)
    if d <= k + n + 2:
        warnings.append(f"validity bound requires d > k+n+2 = {k + n + 2}; got d = {d}")
    ordered = eval_chain(head_pa1(0), profile, c)
    return _make_result(ordered, profile, c, warnings)


def eval_PA1(r: int, profile, c: RingElem) -> int:
    """[P^(r)A1 T_{k1}...T_{kn}] . c: node on the line, one branch tangent
    to order r, plus further tangency points."""
    return eval_chain(head_pa1(r), tuple(profile), c)

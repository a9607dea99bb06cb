"""Recursive evaluation of characteristic-number chains.

A chain is a class [X T_{k1} ... T_{kn}] on the space M with one marked
point per tangency order k_i and (for singular heads X) one extra marked
point at the singularity.  The supported heads are:

    "T"          -- no singularity (the chain is [T_{k1}...T_{kn}] alone);
    "A1F"        -- a node at a free marked point;
    ("PA1", r)   -- a node on the line, one branch tangent to order r;
    "A2F"        -- a cusp at a free marked point;
    "A2L"        -- a cusp on the line.

All chains are reduced by two moves applied to the LAST profile entry:

  * trailing zero (forget the last point): multiply by the order-0 tangency
    class of the last point, push forward, and subtract the diagonal
    corrections -- one (k_i+1)-weighted plane diagonal per earlier point,
    plus (for heads whose singular point lies on the line) an excess term
    along the diagonal with the singular point;

  * positive last entry k (collision): replace T_k by T_{k-1} T_0 cut down
    by the collision divisor a_n + a_{n+1} - y1, and subtract the
    degeneration where the new point runs into the singular point (the node
    acquires a tangent branch, a cusp moves onto the line).

The base cases are explicit classes on the 0-pointed space, except the
tangent-branch head ("PA1", r) with r >= 1, which trades one order of
branch tangency for a trailing T_0 point cut down by b1 + a1 - y1.

Evaluation is memoized per (head, profile, degree, constraint monomial);
constraint polynomials are split into monomials by linearity.
"""

from __future__ import annotations

from .ring import (
    RingElem,
    SpaceSig,
    b,
    collapse_last_a_to_b,
    collision_divisor,
    collision_divisor_b,
    diagonal,
    diagonal_b,
    integrate,
    lift_a,
    y1,
    yd,
)

HEAD_T = "T"
HEAD_A1F = "A1F"
HEAD_A2F = "A2F"
HEAD_A2L = "A2L"


def head_pa1(r: int):
    if r < 0:
        raise ValueError(f"branch tangency order must be non-negative, got {r}")
    return ("PA1", r)


def head_marked_points(head) -> int:
    """Number of singular-type marked points the head contributes (0 or 1)."""
    return 0 if head == HEAD_T else 1


def _head_excess(head) -> int:
    """Multiplicity of the singular-point diagonal in the trailing-zero move."""
    if head == HEAD_A2L:
        return 2
    if isinstance(head, tuple) and head[0] == "PA1":
        return head[1] + 2
    return 0


def _collision_degeneration(head, k: int):
    """(new head, multiplicity) for the term subtracted in the collision move."""
    if head == HEAD_A1F:
        return head_pa1(k - 1), (2 if k == 1 else 1)
    if head == HEAD_A2F:
        if k != 1:
            raise ValueError("cusp chains support only first-order tangencies")
        return HEAD_A2L, 3
    if head == HEAD_A2L and k != 1:
        raise ValueError("cusp chains support only first-order tangencies")
    return None


def node_free_class(sig: SpaceSig) -> RingElem:
    """Class of curves with a node at the first singular marked point."""
    d = sig.d
    Y, B = yd(sig), b(sig, 1)
    return (3 * d * d - 6 * d + 3) * (Y * B * B) + (3 * d - 3) * (Y * Y * B) + Y * Y * Y


def cusp_free_class(sig: SpaceSig) -> RingElem:
    """Class of curves with a cusp at the first singular marked point."""
    d = sig.d
    Y, B = yd(sig), b(sig, 1)
    return (12 * d * d - 36 * d + 24) * (Y * Y * B * B) + (8 * d - 12) * (Y * Y * Y * B) \
        + 2 * (Y * Y * Y * Y)


def class_T0(sig: SpaceSig, i: int) -> RingElem:
    """Class of curves through the i-th tangency point on the line:
    (y1 + a_i) * (yd + d*a_i)."""
    from .ring import a as a_gen
    ai = a_gen(sig, i)
    return (y1(sig) + ai) * (yd(sig) + sig.d * ai)


def _base_class(head, sig: SpaceSig) -> RingElem:
    if head == HEAD_T:
        return RingElem.one(sig)
    if head == HEAD_A1F:
        return node_free_class(sig)
    if head == HEAD_A2F:
        return cusp_free_class(sig)
    if head == HEAD_A2L:
        return cusp_free_class(sig) * (y1(sig) + b(sig, 1))
    if isinstance(head, tuple) and head[0] == "PA1" and head[1] == 0:
        return node_free_class(sig) * (y1(sig) + b(sig, 1))
    raise ValueError(f"no base class for head {head}")


_memo: dict = {}


def clear_cache() -> None:
    _memo.clear()


def eval_chain(head, profile, constraint: RingElem) -> int:
    """Intersection number [head T_{k1}...T_{kn}] . constraint.

    The constraint must live on the space with head_marked_points(head)
    singular points and len(profile) tangency points.
    """
    profile = tuple(profile)
    if any(k < 0 for k in profile):
        raise ValueError(f"tangency orders must be non-negative: {profile}")
    sig = constraint.sig
    expected = SpaceSig(sig.d, head_marked_points(head), len(profile))
    if sig != expected:
        raise ValueError(f"constraint lives on {sig}, chain needs {expected}")
    total = 0
    for mono, coeff in constraint.terms.items():
        total += coeff * _eval_mono(head, profile, sig, mono)
    return total


def _eval_mono(head, profile, sig: SpaceSig, mono) -> int:
    key = (head, profile, sig.d, mono)
    cached = _memo.get(key)
    if cached is not None:
        return cached

    c = RingElem(sig, {mono: 1})
    if not profile:
        val = _eval_base(head, sig, c)
    elif profile[-1] == 0:
        val = _eval_trailing_zero(head, profile, sig, c)
    else:
        val = _eval_collision(head, profile, sig, c)
    _memo[key] = val
    return val


def _eval_base(head, sig: SpaceSig, c: RingElem) -> int:
    if isinstance(head, tuple) and head[0] == "PA1" and head[1] >= 1:
        # Trade one order of branch tangency for a T_0 point forced onto
        # the singular point by the divisor b1 + a1 - y1.
        up = lift_a(c)
        return eval_chain(head_pa1(head[1] - 1), (0,), collision_divisor_b(up.sig, 1) * up)
    return integrate(_base_class(head, sig) * c)


def _eval_trailing_zero(head, profile, sig: SpaceSig, c: RingElem) -> int:
    from .ring import pushforward_last_a as push

    rest = profile[:-1]
    n = len(profile)
    total = eval_chain(head, rest, push(class_T0(sig, n) * c))
    for i, k_i in enumerate(rest, 1):
        total -= (k_i + 1) * eval_chain(head, rest, push(diagonal(sig, i, n) * c))
    excess = _head_excess(head)
    if excess:
        total -= excess * eval_chain(head, rest, push(diagonal_b(sig, n) * c))
    return total


def _eval_collision(head, profile, sig: SpaceSig, c: RingElem) -> int:
    k = profile[-1]
    n = len(profile)
    up = lift_a(c)
    split = profile[:-1] + (k - 1, 0)
    total = eval_chain(head, split, collision_divisor(up.sig, n, n + 1) * up)
    degeneration = _collision_degeneration(head, k)
    if degeneration is not None:
        new_head, mult = degeneration
        total -= mult * eval_chain(new_head, profile[:-1], collapse_last_a_to_b(c))
    return total

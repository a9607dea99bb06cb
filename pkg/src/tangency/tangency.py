"""Counts of smooth plane curves tangent to a fixed line at several points.

The main entry point is :func:`eval_T`, which computes the intersection
number [T_{k1} ... T_{kn}] . c for a tangency profile (k1, ..., kn) and a
point/line constraint c.  Counts are computed with the tangency points
ordered; the unordered count divides out the permutations of interchangeable
points and is reported alongside.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .evaluator import HEAD_T, class_T0, eval_chain  # noqa: F401  (class_T0 re-exported)
from .ring import RingElem, SpaceSig


@dataclass(frozen=True)
class CountResult:
    """An exact ordered count plus its unordered presentation."""

    ordered_value: int
    symmetry_factor: int
    unordered_value: int | None
    warnings: tuple = field(default_factory=tuple)

    def __int__(self) -> int:
        return self.ordered_value


def constraint(sig: SpaceSig, r: int = 0, s: int = 0, nu=(), eps=()) -> RingElem:
    """The monomial y1^r * yd^s * prod b_j^nu_j * prod a_i^eps_i on sig."""
    if len(nu) > sig.m or len(eps) > sig.n:
        raise ValueError(f"too many exponents for {sig}: nu={nu}, eps={eps}")
    return RingElem.monomial(sig, y1=r, yd=s, b=tuple(nu), a=tuple(eps))


def symmetry_factor(profile, c: RingElem | None = None) -> int:
    """Number of orderings identified when presenting an unordered count.

    Two tangency points are interchangeable when they have the same order
    and carry the same point constraint.  When the constraint polynomial
    does not assign a uniform a-exponent per slot, slots are distinguished
    by order alone.
    """
    slots = list(profile)
    if c is not None and c.terms:
        a_vectors = {mono[3] for mono in c.terms}
        if len(a_vectors) == 1:
            ea = next(iter(a_vectors))
            slots = list(zip(profile, ea))
    factor = 1
    for kind in set(slots):
        factor *= factorial(slots.count(kind))
    return factor


def _make_result(ordered: int, profile, c: RingElem, warnings) -> CountResult:
    sym = symmetry_factor(profile, c)
    unordered = ordered // sym if ordered % sym == 0 else None
    return CountResult(ordered, sym, unordered, tuple(warnings))


def eval_T(d: int, profile, c: RingElem) -> CountResult:
    """Ordered count [T_{k1}...T_{kn}] . c of smooth tangent curves.

    The constraint c must live on SpaceSig(d, 0, n) with n = len(profile).
    A warning (not an error) is attached when d <= k + n - 1, outside the
    proven validity bound; the computed value is still returned.
    """
    profile = tuple(profile)
    warnings = []
    k, n = sum(profile), len(profile)
    if n and d <= k + n - 1:
        warnings.append(
            f"validity bound requires d > k+n-1 = {k + n - 1}; got d = {d}"
        )
    ordered = eval_chain(HEAD_T, profile, c)
    return _make_result(ordered, profile, c, warnings)

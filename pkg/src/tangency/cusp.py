"""Counts of 1-cuspidal plane curves with first-order tangency conditions.

Only order-1 tangencies are supported alongside a cusp: the degeneration
analysis behind the collision move is carried out for T1 points only, so
higher orders are rejected rather than extrapolated.
"""

from __future__ import annotations

from .evaluator import HEAD_A2F, HEAD_A2L, cusp_free_class, eval_chain
from .ring import RingElem, SpaceSig, b, y1
from .tangency import CountResult, _make_result


def class_A2F(d: int) -> RingElem:
    """Free-cusp class (12d^2-36d+24) yd^2 b1^2 + (8d-12) yd^3 b1 + 2 yd^4."""
    return cusp_free_class(SpaceSig(d, 1, 0))


def class_A2L(d: int) -> RingElem:
    """Cusp-on-the-line class [A2F] * (y1 + b1)."""
    sig = SpaceSig(d, 1, 0)
    return cusp_free_class(sig) * (y1(sig) + b(sig, 1))


def eval_A2F_T1s(d: int, n: int, c: RingElem) -> CountResult:
    """Ordered count [A2F T1...T1] . c with n first-order tangency points."""
    profile = (1,) * n
    warnings = []
    if n and d <= 2 * n + 2:
        warnings.append(f"validity bound requires d > 2n+2 = {2 * n + 2}; got d = {d}")
    ordered = eval_chain(HEAD_A2F, profile, c)
    return _make_result(ordered, profile, c, warnings)


def eval_A2L_T1s(d: int, n: int, c: RingElem) -> int:
    """[A2L T1...T1] . c with n first-order tangency points."""
    return eval_chain(HEAD_A2L, (1,) * n, c)

"""Cuspidal counts: golden values, class consistency, input validation."""

import pytest

from tangency.cusp import class_A2F, class_A2L, eval_A2F_T1s, eval_A2L_T1s
from tangency.exprs import evaluate, parse
from tangency.ring import RingElem, SpaceSig, delta, integrate


def test_cuspidal_cubics_tangent():
    c = RingElem.monomial(SpaceSig(3, 1, 1), y1=2, yd=6)
    assert eval_A2F_T1s(3, 1, c).ordered_value == 60


def test_classical_cuspidal_two_routes():
    for d in range(3, 8):
        sig = SpaceSig(d, 1, 0)
        c = RingElem.monomial(sig, y1=2, yd=delta(d) - 2)
        via_class = integrate(class_A2F(d) * c)
        via_chain = eval_A2F_T1s(d, 0, c).ordered_value
        assert via_class == via_chain == 12 * (d - 1) * (d - 2)


def test_cusp_on_line_class_matches_chain():
    for d in (3, 4, 5):
        sig = SpaceSig(d, 1, 0)
        for kw in ({"y1": 1, "yd": delta(d) - 4},
                   {"yd": delta(d) - 4, "b": (1,)}):
            c = RingElem.monomial(sig, **kw)
            assert eval_A2L_T1s(d, 0, c) == integrate(class_A2L(d) * c)


def test_higher_tangency_with_cusp_rejected():
    with pytest.raises(ValueError):
        evaluate(parse("[A2F T2] . y1^2 * yd^10"), 5)


def test_validity_warning():
    c = RingElem.monomial(SpaceSig(4, 1, 1), y1=2, yd=9, a=(1,))
    assert eval_A2F_T1s(4, 1, c).warnings

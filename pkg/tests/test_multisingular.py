"""Binodal and tacnodal counts: coefficient tables and classical values."""

import pytest

from tangency.multisingular import (
    class_A1FA1F,
    class_A3F,
    closed_form_A1FA1F,
    closed_form_A3F,
    coeff_table_A1FA1F,
    coeff_table_A3F,
    eval_A1LA1L,
    eval_PA3,
)
from tangency.ring import RingElem, SpaceSig, delta, integrate


def test_binodal_table_matches_closed_form():
    # coeff_table_A1FA1F raises if the computed table disagrees
    for d in range(4, 8):
        assert coeff_table_A1FA1F(d) == closed_form_A1FA1F(d)


def test_tacnode_table_matches_closed_form():
    for d in range(4, 8):
        assert coeff_table_A3F(d) == closed_form_A3F(d)


def test_binodal_quartics_on_line():
    # ordered count of binodal quartics with both nodes on the line
    sig = SpaceSig(4, 2, 0)
    c = RingElem.monomial(sig, yd=delta(4) - 2)
    assert eval_A1LA1L(4, c) == 450
    # unordered: the two nodes are interchangeable
    assert eval_A1LA1L(4, c) // 2 == 225


def test_classical_binodal_quartics():
    # 225 again via the free binodal class against 12 point conditions
    sig = SpaceSig(4, 2, 0)
    c = RingElem.monomial(sig, y1=2, yd=delta(4) - 2)
    assert integrate(class_A1FA1F(4) * c) // 2 == 225


def test_classical_tacnodal_quartics():
    assert eval_PA3(4, RingElem.monomial(SpaceSig(4, 1, 0), yd=delta(4) - 3)) == 200
    sig = SpaceSig(4, 1, 0)
    c = RingElem.monomial(sig, y1=2, yd=delta(4) - 3)
    assert integrate(class_A3F(4) * c) == 200


def test_symmetry_of_binodal_coefficients():
    table = coeff_table_A1FA1F(5)
    for (i, j, k), value in table.items():
        assert table[(i, k, j)] == value


def test_wrong_signature_rejected():
    c = RingElem.monomial(SpaceSig(4, 1, 0), yd=12)
    with pytest.raises(ValueError):
        eval_A1LA1L(4, c)
    with pytest.raises(ValueError):
        eval_PA3(4, RingElem.monomial(SpaceSig(4, 2, 0), yd=11))
    with pytest.raises(ValueError):
        coeff_table_A1FA1F(3)

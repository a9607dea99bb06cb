"""Rational curve counts from associativity relations."""

import pytest

from tangency.nodal import eval_A1F_T
from tangency.ring import RingElem, SpaceSig, delta
from tangency.wdvv import gw_table, kontsevich_nd, nd_T1


def test_kontsevich_numbers():
    golden = {1: 1, 2: 1, 3: 12, 4: 620, 5: 87304, 6: 26312976}
    for d, want in golden.items():
        assert kontsevich_nd(d) == want


def test_tangent_rational_counts():
    golden = {
        2: 2,
        3: 36,
        4: 2184,
        5: 335792,
        6: 106976160,
        7: 61739450304,
        8: 58749399019136,
    }
    for d, want in golden.items():
        assert nd_T1(d) == want


def test_cubic_case_agrees_with_nodal_route():
    # rational cubics are nodal cubics: 36 by both methods
    c = RingElem.monomial(SpaceSig(3, 1, 1), y1=2, yd=delta(3) - 2)
    assert eval_A1F_T(3, (1,), c).ordered_value == nd_T1(3) == 36


def test_gw_table():
    table = gw_table(4)
    assert set(table) == {1, 2, 3, 4}
    assert table[3] == (12, 36)
    assert table[4] == (620, 2184)


def test_invalid_degree():
    with pytest.raises(ValueError):
        kontsevich_nd(0)
    with pytest.raises(ValueError):
        nd_T1(0)

"""Smooth tangency counts: golden values, symmetry handling, warnings."""

from tangency.ring import RingElem, SpaceSig, delta
from tangency.tangency import eval_T, symmetry_factor


def _mono(d, n, **kw):
    return RingElem.monomial(SpaceSig(d, 0, n), **kw)


def test_tangent_conics():
    # conics through 4 points tangent to a fixed line
    result = eval_T(2, (1,), _mono(2, 1, y1=2, yd=4))
    assert result.ordered_value == 2


def test_unordered_t1t1t2_table():
    golden = {4: 0, 5: 0, 6: 0, 7: 36, 8: 144, 9: 360}
    for d, want in golden.items():
        c = _mono(d, 3, y1=2, yd=delta(d) - 4)
        result = eval_T(d, (1, 1, 2), c)
        assert result.symmetry_factor == 2
        assert result.unordered_value == want


def test_fixed_first_point_table():
    golden = {7: 12, 8: 36, 9: 72}
    for d, want in golden.items():
        c = _mono(d, 3, y1=2, yd=delta(d) - 5, a=(1, 0, 0))
        result = eval_T(d, (1, 1, 2), c)
        # the fixed point breaks the symmetry between the two T1 slots
        assert result.symmetry_factor == 1
        assert result.ordered_value == want


def test_symmetry_factor_groups_equal_slots():
    c = _mono(5, 4, y1=2, yd=delta(5) - 9, a=(0, 0, 0, 0))
    assert symmetry_factor((1, 1, 1, 2), c) == 6
    c2 = _mono(5, 4, y1=2, yd=delta(5) - 10, a=(1, 0, 0, 0))
    assert symmetry_factor((1, 1, 1, 2), c2) == 2


def test_validity_warning_low_degree():
    # d <= k + n - 1 is outside the proven transversality range
    c = _mono(2, 2, y1=2, yd=2)
    result = eval_T(2, (1, 1), c)
    assert result.warnings
    ok = eval_T(4, (1, 1), _mono(4, 2, y1=2, yd=10))
    assert not ok.warnings


def test_dimension_mismatch_gives_zero():
    c = _mono(4, 1, y1=2, yd=5)
    assert eval_T(4, (1,), c).ordered_value == 0

"""Unit and property tests for the truncated cohomology ring."""

import random

import pytest

from tangency.ring import (
    RingElem,
    SpaceSig,
    a,
    add_b,
    b,
    collapse_last_a_to_b,
    collision_divisor,
    delta,
    diagonal,
    integrate,
    lift_a,
    merge_b_into_first,
    pushforward_last_a,
    rename_b_to_last_a,
    y1,
    yd,
)


def test_delta():
    assert delta(1) == 2
    assert delta(2) == 5
    assert delta(3) == 9
    assert delta(4) == 14


def test_sig_dimensions():
    sig = SpaceSig(4, 2, 3)
    assert sig.delta == 14
    assert sig.dim == 2 + 14 + 2 * 2 + 2 * 3


def test_truncation_caps():
    sig = SpaceSig(3, 1, 1)

    def power(x, k):
        out = RingElem.one(sig)
        for _ in range(k):
            out = out * x
        return out

    assert power(y1(sig), 3) == RingElem.zero(sig)
    assert power(b(sig, 1), 3) == RingElem.zero(sig)
    assert power(a(sig, 1), 3) == RingElem.zero(sig)
    assert power(yd(sig), 9) != RingElem.zero(sig)
    assert power(yd(sig), 10) == RingElem.zero(sig)


def test_integrate_top_class():
    sig = SpaceSig(2, 1, 1)
    top = RingElem.monomial(sig, y1=2, yd=5, b=(2,), a=(2,))
    assert integrate(top) == 1
    assert integrate(3 * top) == 3
    assert integrate(RingElem.monomial(sig, y1=2, yd=5, b=(2,), a=(1,))) == 0


def test_pushforward_extracts_a_square():
    sig = SpaceSig(2, 0, 1)
    e = RingElem.monomial(sig, y1=1, a=(2,)) + RingElem.monomial(sig, y1=2, a=(1,))
    out = pushforward_last_a(e)
    assert out.sig == SpaceSig(2, 0, 0)
    assert out == RingElem.monomial(SpaceSig(2, 0, 0), y1=1)


def test_diagonal_and_collision_classes():
    sig = SpaceSig(3, 0, 2)
    d12 = diagonal(sig, 1, 2)
    expected = (
        RingElem.monomial(sig, a=(2, 0))
        + RingElem.monomial(sig, a=(1, 1))
        + RingElem.monomial(sig, a=(0, 2))
    )
    assert d12 == expected
    assert collision_divisor(sig, 1, 2) == a(sig, 1) + a(sig, 2) - y1(sig)


def test_rename_and_collapse_round_trip():
    sig = SpaceSig(3, 1, 0)
    e = RingElem.monomial(sig, y1=1, yd=2, b=(2,))
    lifted = rename_b_to_last_a(e, 1)
    assert lifted.sig == SpaceSig(3, 0, 1)
    back = collapse_last_a_to_b(add_b(lifted))
    assert back == e


def test_merge_b_into_first():
    sig = SpaceSig(4, 2, 0)
    e = RingElem.monomial(sig, yd=3, b=(1, 1))
    merged = merge_b_into_first(e)
    assert merged == RingElem.monomial(SpaceSig(4, 1, 0), yd=3, b=(2,))
    # exceeding the nilpotency cap kills the term
    assert merge_b_into_first(RingElem.monomial(sig, b=(2, 1))) == RingElem.zero(
        SpaceSig(4, 1, 0)
    )


def _random_elem(rng, sig, max_terms=4):
    out = RingElem.zero(sig)
    for _ in range(rng.randint(1, max_terms)):
        mono = RingElem.monomial(
            sig,
            y1=rng.randint(0, 2),
            yd=rng.randint(0, min(sig.delta, 6)),
            b=tuple(rng.randint(0, 2) for _ in range(sig.m)),
            a=tuple(rng.randint(0, 2) for _ in range(sig.n)),
            coeff=rng.randint(-5, 5),
        )
        out = out + mono
    return out


def _random_sig(rng):
    return SpaceSig(rng.randint(2, 6), rng.randint(0, 2), rng.randint(0, 3))


def test_ring_axioms_randomized():
    rng = random.Random(20260823)
    for _ in range(120):
        sig = _random_sig(rng)
        x, y, z = (_random_elem(rng, sig) for _ in range(3))
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + RingElem.zero(sig) == x
        assert x * RingElem.one(sig) == x


def test_projection_formula_randomized():
    rng = random.Random(8881)
    for _ in range(120):
        d, m, n = rng.randint(2, 5), rng.randint(0, 1), rng.randint(0, 2)
        base = SpaceSig(d, m, n)
        up = base.add_a()
        alpha = _random_elem(rng, base)
        beta = _random_elem(rng, up)
        left = pushforward_last_a(lift_a(alpha) * beta)
        right = alpha * pushforward_last_a(beta)
        assert left == right


def test_sig_mismatch_rejected():
    x = y1(SpaceSig(3, 0, 0))
    y = y1(SpaceSig(4, 0, 0))
    with pytest.raises(ValueError):
        _ = x + y
    with pytest.raises(ValueError):
        _ = x * y
